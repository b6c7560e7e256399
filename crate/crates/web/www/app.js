import init, { lmaps, heilbronn, random } from "./pkg/lmap_web.js";

const SIZE = 440;
const NS = "http://www.w3.org/2000/svg";
const $ = (id) => document.getElementById(id);

// Points in editor units with the y axis pointing up.
let points = [];

function hull(pts) {
  const p = [...pts].sort((a, b) => a[0] - b[0] || a[1] - b[1]);
  if (p.length < 3) return p;
  const cross = (o, a, b) => (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  const half = (seq) => {
    const out = [];
    for (const q of seq) {
      while (out.length >= 2 && cross(out[out.length - 2], out[out.length - 1], q) <= 0) out.pop();
      out.push(q);
    }
    out.pop();
    return out;
  };
  return half(p).concat(half([...p].reverse()));
}

function draw() {
  const svg = $("editor");
  svg.replaceChildren();
  const h = hull(points);
  if (h.length >= 3) {
    const poly = document.createElementNS(NS, "polygon");
    poly.setAttribute("points", h.map(([x, y]) => `${x},${SIZE - y}`).join(" "));
    poly.setAttribute("fill", "#e8eef7");
    poly.setAttribute("stroke", "#345");
    svg.appendChild(poly);
  }
  for (const [x, y] of points) {
    const c = document.createElementNS(NS, "circle");
    c.setAttribute("cx", x);
    c.setAttribute("cy", SIZE - y);
    c.setAttribute("r", 3);
    c.setAttribute("fill", "#345");
    svg.appendChild(c);
  }
}

function status(msg, error = false) {
  $("status").textContent = msg;
  $("status").className = error ? "error" : "";
}

function run(op) {
  const h = hull(points);
  if (h.length < 3) return status("need at least three points in convex position", true);
  try {
    const t0 = performance.now();
    const out = JSON.parse(op(JSON.stringify(h)));
    $("result").innerHTML = out.svg;
    return [out, performance.now() - t0];
  } catch (e) {
    status(e.message ?? String(e), true);
    return null;
  }
}

function showLmaps() {
  const got = run(lmaps);
  if (!got) return;
  const [out, ms] = got;
  const r = out.report;
  const rows = r.lmaps
    .map((c, k) => `<tr><td>${k === r.map_index ? "MAP" : k}</td><td>${c.area.toFixed(2)}</td><td>${c.found_by.join(", ")}</td></tr>`)
    .join("");
  $("table").innerHTML = `<table><tr><th></th><th>area</th><th>found by</th></tr>${rows}</table>`;
  status(`${r.lmaps.length} locally maximal parallelograms in ${ms.toFixed(1)} ms`);
}

function showHeilbronn() {
  const got = run(heilbronn);
  if (!got) return;
  const [out, ms] = got;
  const h = out.result;
  $("table").innerHTML = "";
  status(
    `smallest triangle ${h.value.toFixed(2)} (largest triangle / 3 = ${(h.t / 3).toFixed(2)}, ` +
      `largest parallelogram / 2 = ${(h.p / 2).toFixed(2)}) in ${ms.toFixed(1)} ms`,
  );
}

function randomPolygon() {
  try {
    const v = JSON.parse(random(Number($("n").value), Number($("seed").value)));
    const xs = v.map((p) => p[0]);
    const ys = v.map((p) => p[1]);
    const [x0, y0] = [Math.min(...xs), Math.min(...ys)];
    const k = (SIZE - 80) / Math.max(Math.max(...xs) - x0, Math.max(...ys) - y0);
    points = v.map(([x, y]) => [40 + (x - x0) * k, 40 + (y - y0) * k]);
    draw();
    showLmaps();
  } catch (e) {
    status(e.message ?? String(e), true);
  }
}

await init();
$("editor").addEventListener("click", (ev) => {
  const box = $("editor").getBoundingClientRect();
  const x = ((ev.clientX - box.left) / box.width) * SIZE;
  const y = SIZE - ((ev.clientY - box.top) / box.height) * SIZE;
  points.push([x, y]);
  draw();
});
$("clear").onclick = () => {
  points = [];
  draw();
  $("result").innerHTML = "";
  $("table").innerHTML = "";
  status("");
};
$("random").onclick = randomPolygon;
$("lmaps").onclick = showLmaps;
$("heilbronn").onclick = showHeilbronn;
randomPolygon();
