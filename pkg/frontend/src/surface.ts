/**
 * 3-D surface of mean handover rate over (TTT, gNB density) for one case
 * at the fixed study velocity, drawn as painter-ordered quads in an
 * isometric projection.
 */

import { AggregateRow, InputError, gridFor } from "./csv";
import { Svg, colorRamp } from "./svg";

export const SURFACE_VELOCITY_KMH = 50;

const W = 640;
const H = 480;

export function renderSurface(rows: AggregateRow[], caseLabel: string): string {
  const { ttts, densities, cell } = gridFor(rows, caseLabel, SURFACE_VELOCITY_KMH);
  if (ttts.length < 2 || densities.length < 2) {
    throw new InputError(
      `surface needs at least a 2x2 grid, got ${ttts.length} TTT x ${densities.length} density values`
    );
  }

  const z = (ti: number, di: number): number =>
    cell.get(`${ttts[ti]}|${densities[di]}`)!.meanHoRate;

  let zMin = Infinity;
  let zMax = -Infinity;
  for (let ti = 0; ti < ttts.length; ti++) {
    for (let di = 0; di < densities.length; di++) {
      zMin = Math.min(zMin, z(ti, di));
      zMax = Math.max(zMax, z(ti, di));
    }
  }
  const zSpan = zMax > zMin ? zMax - zMin : 1;

  // isometric projection of unit grid coordinates
  const nx = densities.length - 1;
  const ny = ttts.length - 1;
  const sx = 250 / Math.max(nx, 1);
  const sy = 250 / Math.max(ny, 1);
  const zScale = 140;
  const cx = W / 2;
  const cy = H - 150;
  const project = (di: number, ti: number, value: number): [number, number] => {
    const px = cx + (di * sx - ti * sy) * 0.9;
    const py = cy - (di * sx + ti * sy) * 0.45 - ((value - zMin) / zSpan) * zScale;
    return [px, py];
  };

  const svg = new Svg(W, H);
  svg.text(20, 24, `handover rate vs TTT and density (case ${caseLabel})`, 14);
  svg.text(20, 42, `z range: min=${zMin.toFixed(2)} max=${zMax.toFixed(2)}`, 11);

  // painter's order: far cells (high ti+di) first
  const quads: Array<{ depth: number; ti: number; di: number }> = [];
  for (let ti = 0; ti < ny; ti++) {
    for (let di = 0; di < nx; di++) {
      quads.push({ depth: ti + di, ti, di });
    }
  }
  quads.sort((a, b) => b.depth - a.depth || a.ti - b.ti || a.di - b.di);
  for (const { ti, di } of quads) {
    const corners: Array<[number, number]> = [
      project(di, ti, z(ti, di)),
      project(di + 1, ti, z(ti, di + 1)),
      project(di + 1, ti + 1, z(ti + 1, di + 1)),
      project(di, ti + 1, z(ti + 1, di)),
    ];
    const mean = (z(ti, di) + z(ti, di + 1) + z(ti + 1, di) + z(ti + 1, di + 1)) / 4;
    svg.polygon(corners, colorRamp(mean, zMin, zMax));
  }

  // axis annotations at the grid's near edges
  const [oX, oY] = project(0, 0, zMin);
  svg.text(oX - 8, oY + 28, `TTT: ${ttts[0]}..${ttts[ttts.length - 1]}`, 11, "end");
  const [dX, dY] = project(nx, 0, zMin);
  svg.text(dX + 8, dY + 28, `density: ${densities[0]}..${densities[densities.length - 1]}`, 11);
  return svg.render();
}
