import init, { classify, xi, scan_curve } from "./pkg/buchi_web.js";

const $ = (id) => document.getElementById(id);

function show(id, text) {
  const v = JSON.parse(text);
  const out = $(id);
  out.className = v.error ? "err" : "";
  return [v, out];
}

function onClassify() {
  const [v, out] = show("classify-out", classify($("c1").value, $("c2").value, $("c3").value, $("c4").value));
  if (v.error) { out.textContent = v.error; return; }
  const chain = v.descent.map((s, i) => `  ${i + 1}: ${s.point}  via ${s.via}`).join("\n");
  out.textContent =
    `${v.seq}\n${v.label}\n\ndescent:\n${chain || "  (none)"}\n  end: ${v.end}\n\n` +
    `extends left: ${v.extends.left ?? "no"}, right: ${v.extends.right ?? "no"}`;
}

function onXi() {
  const [v, out] = show("xi-out", xi(Number($("xn").value), $("xt").value));
  out.textContent = v.error ?? `${v.text}\nextends left: ${v.extends.left ?? "no"}, right: ${v.extends.right ?? "no"}`;
}

function onScan() {
  const right = $("sside").value === "right";
  const [v, out] = show("scan-out", scan_curve(Number($("sn").value), right, Number($("smin").value), Number($("smax").value)));
  if (v.error) { out.textContent = v.error; return; }
  const rows = v.hits.map((h) => `  t = ${h.t}, y = ${h.y}${h.trivial ? "  (trivial)" : ""}`).join("\n");
  out.textContent = `y² = ${v.rhs}\n\n${v.hits.length} hit(s)\n${rows}`;
}

await init();
$("classify").onclick = onClassify;
$("xi").onclick = onXi;
$("scan").onclick = onScan;
onClassify();
