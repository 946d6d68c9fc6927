import init, { limit_set, foliation, boost_orbit } from "./pkg/flatlorentz_web.js";

const canvas = document.getElementById("view");
const ctx = canvas.getContext("2d");
const status = document.getElementById("status");
const num = (id) => Number(document.getElementById(id).value);

function color(label) {
  if (label.startsWith("boundary")) return "#999";
  if (label.startsWith("gap_chord")) return "#c63";
  if (label.startsWith("leaf")) return "#9bd";
  if (label.startsWith("selected")) return "#d22";
  if (label.startsWith("step")) return "#36c";
  if (label === "predicted_limit") return "#2a2";
  return "#222";
}

// planar view of the first two coordinates, `extent` units from centre to edge
function draw(text, extent) {
  const scene = JSON.parse(text);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (scene.error) {
    status.textContent = "error: " + scene.error;
    return;
  }
  const s = canvas.width / (2 * extent);
  const px = (c) => [canvas.width / 2 + s * c[0], canvas.height / 2 - s * c[1]];
  if (scene.frame === "ball") {
    ctx.strokeStyle = "#999";
    ctx.beginPath();
    ctx.arc(canvas.width / 2, canvas.height / 2, s, 0, 2 * Math.PI);
    ctx.stroke();
  }
  for (const line of scene.polylines) {
    ctx.strokeStyle = color(line.label);
    ctx.lineWidth = line.label.startsWith("selected") ? 2.5 : 1;
    ctx.beginPath();
    line.coords.forEach((c, i) => (i ? ctx.lineTo(...px(c)) : ctx.moveTo(...px(c))));
    ctx.stroke();
  }
  for (const set of scene.points) {
    ctx.fillStyle = color(set.label);
    for (const c of set.coords) {
      const [x, y] = px(c);
      ctx.fillRect(x - 1.5, y - 1.5, 3, 3);
    }
  }
  const meta = scene.metadata;
  status.textContent = Object.keys(meta)
    .map((k) => `${k}: ${Array.isArray(meta[k]) ? meta[k].at(-1).toExponential(3) + " (last)" : meta[k]}`)
    .join(", ");
}

await init();

document.getElementById("ls-go").onclick = () =>
  draw(limit_set(num("ls-ell"), num("ls-depth")), 0.5);
document.getElementById("fo-go").onclick = () =>
  draw(foliation(num("fo-count"), num("fo-x"), num("fo-y"), num("fo-z")), 2.6);
document.getElementById("bo-go").onclick = () =>
  draw(boost_orbit(num("bo-ell"), num("bo-mu"), num("bo-steps"), num("bo-spread")), 1.1);

document.getElementById("ls-go").click();
