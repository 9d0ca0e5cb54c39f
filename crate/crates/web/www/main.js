// Front end for the wasm bindings. Every binding returns a JSON string.
import init, { analyze, differences, mason } from "./pkg/diffrad_web.js";

const $ = (id) => document.getElementById(id);
const COLORS = ["#2f6fdd", "#d9480f", "#2b8a3e", "#ae3ec9", "#e67700", "#0c8599", "#c2255c", "#5c940d"];

function escape(text) {
  return String(text).replace(/[&<>"]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;" })[c]);
}

function call(fn, ...args) {
  const result = JSON.parse(fn(...args));
  if (result.error) throw new Error(result.error);
  return result;
}

function showError(target, err) {
  target.innerHTML = `<p class="error">${escape(err.message)}</p>`;
}

// Zeros in the complex plane; each chain is drawn as a run of arrows
// z0 -> z0+1 -> ... in its own color.
function plot(canvas, data) {
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  const pts = data.zeros.map((z) => z.point);
  const span = Math.max(2, ...pts.map((p) => Math.max(Math.abs(p.re), Math.abs(p.im)))) + 1;
  const sx = (re) => width / 2 + (re / span) * (width / 2 - 16);
  const sy = (im) => height / 2 - (im / span) * (height / 2 - 16);

  ctx.strokeStyle = "#d8dde6";
  ctx.lineWidth = 1;
  for (let k = Math.ceil(-span); k <= span; k++) {
    ctx.beginPath(); ctx.moveTo(sx(k), 0); ctx.lineTo(sx(k), height); ctx.stroke();
  }
  ctx.strokeStyle = "#8a93a3";
  ctx.beginPath(); ctx.moveTo(0, sy(0)); ctx.lineTo(width, sy(0)); ctx.stroke();
  ctx.beginPath(); ctx.moveTo(sx(0), 0); ctx.lineTo(sx(0), height); ctx.stroke();

  data.chains.forEach((chain, k) => {
    const color = COLORS[k % COLORS.length];
    // Chains sharing points are offset vertically so they stay distinguishable.
    const lift = -6 * (k % 4);
    ctx.strokeStyle = color;
    ctx.fillStyle = color;
    ctx.lineWidth = 2;
    const ms = chain.members;
    for (let j = 0; j + 1 < ms.length; j++) {
      const [x0, y0, x1, y1] = [sx(ms[j].re), sy(ms[j].im) + lift, sx(ms[j + 1].re), sy(ms[j + 1].im) + lift];
      ctx.beginPath(); ctx.moveTo(x0 + 5, y0); ctx.lineTo(x1 - 5, y1); ctx.stroke();
      ctx.beginPath(); ctx.moveTo(x1 - 5, y1); ctx.lineTo(x1 - 11, y1 - 4); ctx.lineTo(x1 - 11, y1 + 4); ctx.fill();
    }
    for (const [j, m] of ms.entries()) {
      ctx.beginPath();
      ctx.arc(sx(m.re), sy(m.im) + lift, j === 0 ? 5 : 3.5, 0, 2 * Math.PI);
      j === 0 ? ctx.fill() : ctx.stroke();
    }
  });
}

function runAnalyze() {
  const out = $("analysis");
  try {
    const data = call(analyze, $("poly").value);
    plot($("plane"), data);
    const zeros = data.zeros.map((z) => `<tr><td>${escape(z.point.text)}</td><td>${z.multiplicity}</td></tr>`).join("");
    const chains = data.chains
      .map((c, k) => `<tr><td style="color:${COLORS[k % COLORS.length]}">●</td><td>${escape(c.start.text)}</td><td>${c.length}</td></tr>`)
      .join("");
    out.innerHTML = `
      <p><b>P</b> = <code>${escape(data.poly.text)}</code></p>
      <table><tr><th>zero</th><th>mult.</th></tr>${zeros}</table>
      <p>Chains (filled dot = start):</p>
      <table><tr><th></th><th>start</th><th>length</th></tr>${chains}</table>
      <p>rad<sub>Δ</sub>(P) = <code>${escape(data.rad_delta.text)}</code></p>
      <p>rad<sub>Δ</sub><sup>2</sup>(P) = <code>${escape(data.rad_delta_2.text)}</code></p>
      <p>gcd(P, ΔP) = <code>${escape(data.gcd_p_delta_p.text)}</code></p>
      <p>deg P = ${data.poly.degree} = ${data.gcd_p_delta_p.degree} + ${data.rad_delta.degree}</p>`;
  } catch (err) {
    $("plane").getContext("2d").clearRect(0, 0, 460, 460);
    showError(out, err);
  }
}

function runDifferences() {
  const out = $("difftable");
  try {
    const data = call(differences, $("dpoly").value, Number($("dk").value) || 0);
    const rows = data.rows.map((r) => `<tr><td>Δ<sup>${r.k}</sup>P</td><td>${escape(r.poly.text)}</td></tr>`).join("");
    out.innerHTML = `<table>${rows}</table>`;
  } catch (err) {
    showError(out, err);
  }
}

function runMason() {
  const out = $("masonout");
  try {
    const r = call(mason, $("ma").value, $("mb").value, $("mc").value);
    const mark = (ok) => (ok ? `<span class="ok">yes</span>` : `<span class="bad">no</span>`);
    const hyps = r.hypotheses.map((h) => `<tr><td>${escape(h.name)}</td><td>${mark(h.holds)}</td><td>${escape(h.witness)}</td></tr>`).join("");
    out.innerHTML = `
      <table>
        <tr><td>a + b = c</td><td>${mark(r.equation_holds)}</td><td></td></tr>
        ${hyps}
        <tr><td>max deg(a, b, c)</td><td>${r.lhs}</td><td></td></tr>
        <tr><td>deg rad<sub>Δ</sub>(abc) − 1</td><td>${r.rhs}</td><td></td></tr>
        <tr><td>slack</td><td>${r.slack}</td><td>${r.sharp ? "sharp" : ""}</td></tr>
      </table>
      ${r.counterexample ? '<p class="bad">Counterexample: hypotheses hold but the inequality fails.</p>' : ""}`;
  } catch (err) {
    showError(out, err);
  }
}

await init();
$("analyze").addEventListener("click", runAnalyze);
$("differences").addEventListener("click", runDifferences);
$("check").addEventListener("click", runMason);
for (const b of document.querySelectorAll("[data-poly]")) {
  b.addEventListener("click", () => { $("poly").value = b.dataset.poly; runAnalyze(); });
}
runAnalyze();
runDifferences();
runMason();
