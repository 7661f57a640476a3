import init, { Demo } from "./pkg/lsbmark_web.js";

const RANGES = {
  crop: { min: 0, max: 100, step: 1, value: 20, grid: [0, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100] },
  jpeg: { min: 1, max: 100, step: 1, value: 90, grid: [10, 20, 30, 40, 50, 60, 70, 80, 90, 100] },
  blur: { min: 0.1, max: 3, step: 0.1, value: 0.5, grid: [0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.1, 1.2, 1.3, 1.4] },
  saltpepper: { min: 0, max: 0.05, step: 0.001, value: 0.005, grid: [0.001, 0.002, 0.003, 0.004, 0.005, 0.006, 0.007] },
};

const $ = (id) => document.getElementById(id);
let demo;

function paint(id, rgba) {
  const side = demo.side();
  const canvas = $(id);
  canvas.width = side;
  canvas.height = side;
  const data = new ImageData(new Uint8ClampedArray(rgba), side, side);
  canvas.getContext("2d").putImageData(data, 0, 0);
}

const fmt = (v, d = 4) => (Number.isFinite(v) ? v.toFixed(d) : String(v));

function refreshEmbed() {
  paint("cover", demo.cover_rgba());
  paint("marked", demo.marked_rgba());
  paint("diff", demo.diff_rgba());
  paint("mask", demo.mask_rgba());
  paint("wm", demo.watermark_rgba());
  paint("masked", demo.masked_watermark_rgba());
  const s = demo.embed_stats();
  $("embedstats").textContent =
    `mse=${fmt(s.mse)} psnr=${fmt(s.psnr, 2)} dB  pixels by channels written: ` +
    `1=${s.one_channel} 2=${s.two_channels} 3=${s.three_channels}`;
  refreshAttack();
}

function refreshAttack() {
  const kind = $("kind").value;
  const strength = Number($("strength").value);
  $("strengthval").textContent = strength;
  try {
    const r = demo.attack(kind, strength, Number($("noiseseed").value));
    $("attackstats").textContent = `nc=${fmt(r.nc)} sc=${fmt(r.sc)} mse=${fmt(r.mse)} psnr=${fmt(r.psnr, 2)}`;
  } catch (e) {
    $("attackstats").textContent = `error: ${e.message}`;
  }
  paint("attacked", demo.attacked_rgba());
  paint("extracted", demo.extracted_rgba());
}

function setRange(kind) {
  const r = RANGES[kind];
  const s = $("strength");
  Object.assign(s, { min: r.min, max: r.max, step: r.step });
  s.value = r.value;
}

function plotCurve() {
  const kind = $("kind").value;
  const xs = RANGES[kind].grid;
  const ys = demo.nc_curve(kind, new Float64Array(xs), Number($("curveseeds").value));
  const c = $("plot");
  const g = c.getContext("2d");
  const pad = 40;
  const W = c.width - 2 * pad;
  const H = c.height - 2 * pad;
  const x0 = xs[0];
  const x1 = xs[xs.length - 1];
  const px = (x) => pad + ((x - x0) / (x1 - x0)) * W;
  const py = (y) => pad + (1 - y) * H;
  g.clearRect(0, 0, c.width, c.height);
  g.strokeStyle = "#999";
  g.strokeRect(pad, pad, W, H);
  g.fillStyle = "#333";
  g.font = "11px sans-serif";
  for (const y of [0, 0.25, 0.5, 0.75, 1]) g.fillText(y.toFixed(2), 4, py(y) + 4);
  xs.forEach((x) => g.fillText(String(x), px(x) - 8, c.height - pad + 14));
  g.fillText(`NC vs ${kind} strength`, pad, pad - 10);
  g.strokeStyle = "#c33";
  g.lineWidth = 2;
  g.beginPath();
  xs.forEach((x, i) => (i ? g.lineTo(px(x), py(ys[i])) : g.moveTo(px(x), py(ys[i]))));
  g.stroke();
  g.fillStyle = "#c33";
  xs.forEach((x, i) => g.fillRect(px(x) - 2, py(ys[i]) - 2, 4, 4));
}

async function main() {
  await init();
  demo = new Demo(256, 42);
  setRange("crop");

  $("seed").addEventListener("change", () => {
    demo.set_key_seed(Number($("seed").value));
    refreshEmbed();
  });
  $("mode").addEventListener("change", () => {
    demo.set_stable($("mode").value === "stable");
    refreshEmbed();
  });
  $("file").addEventListener("change", async (ev) => {
    const f = ev.target.files[0];
    if (!f) return;
    try {
      demo.load_cover(new Uint8Array(await f.arrayBuffer()), Number($("seed").value));
    } catch (e) {
      alert(e.message);
    }
    refreshEmbed();
  });
  $("kind").addEventListener("change", () => {
    setRange($("kind").value);
    refreshAttack();
  });
  $("strength").addEventListener("input", refreshAttack);
  $("noiseseed").addEventListener("change", refreshAttack);
  $("plotbtn").addEventListener("click", plotCurve);

  refreshEmbed();
  plotCurve();
}

main();
