/**
 * Velocity study charts: handover rate and average handover SINR versus
 * TTT, one line per TU velocity, for the fixed-density Case-B slice.
 * nan KPI cells break the line into separate segments (gaps, not zeros).
 */

import { AggregateRow, InputError, axisValues } from "./csv";
import { SERIES_COLORS, Svg } from "./svg";

export const LINES_CASE = "B";
export const LINES_DENSITY = 20;

const W = 640;
const H = 420;
const MARGIN = { left: 70, right: 150, top: 50, bottom: 55 };

export interface LineChartFiles {
  rate: string;
  sinr: string;
}

export function renderVelocityLines(rows: AggregateRow[]): LineChartFiles {
  const slice = rows.filter(
    (r) => r.caseLabel === LINES_CASE && r.denGnb === LINES_DENSITY
  );
  if (slice.length === 0) {
    throw new InputError(
      `no rows for case ${LINES_CASE} at density ${LINES_DENSITY} (velocity study slice)`
    );
  }
  const velocities = axisValues(slice, (r) => r.velocityKmh);
  const ttts = axisValues(slice, (r) => r.tttTics);
  const byKey = new Map<string, AggregateRow>();
  for (const row of slice) {
    byKey.set(`${row.velocityKmh}|${row.tttTics}`, row);
  }
  const missing: string[] = [];
  for (const v of velocities) {
    for (const t of ttts) {
      if (!byKey.has(`${v}|${t}`)) missing.push(`(velocity=${v}, TTT=${t})`);
    }
  }
  if (missing.length > 0) {
    throw new InputError(`incomplete velocity/TTT grid, missing: ${missing.join(", ")}`);
  }

  const rate = chart(
    "handover rate vs TTT per velocity",
    "mean handover rate",
    velocities,
    ttts,
    (v, t) => byKey.get(`${v}|${t}`)!.meanHoRate
  );
  const sinr = chart(
    "average handover SINR vs TTT per velocity",
    "ho_avg_sinr (dB)",
    velocities,
    ttts,
    (v, t) => byKey.get(`${v}|${t}`)!.hoAvgSinrDb
  );
  return { rate, sinr };
}

function chart(
  title: string,
  yLabel: string,
  velocities: number[],
  ttts: number[],
  value: (v: number, t: number) => number
): string {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of velocities) {
    for (const t of ttts) {
      const y = value(v, t);
      if (!Number.isNaN(y)) {
        lo = Math.min(lo, y);
        hi = Math.max(hi, y);
      }
    }
  }
  if (lo === Infinity) {
    lo = 0;
    hi = 1;
  }
  if (hi === lo) {
    hi = lo + 1;
  }

  const plotW = W - MARGIN.left - MARGIN.right;
  const plotH = H - MARGIN.top - MARGIN.bottom;
  const x = (t: number): number =>
    MARGIN.left +
    ((t - ttts[0]) / Math.max(ttts[ttts.length - 1] - ttts[0], 1)) * plotW;
  const y = (val: number): number => MARGIN.top + (1 - (val - lo) / (hi - lo)) * plotH;

  const svg = new Svg(W, H);
  svg.text(MARGIN.left, 26, title, 14);
  // axes
  svg.line(MARGIN.left, MARGIN.top, MARGIN.left, H - MARGIN.bottom);
  svg.line(MARGIN.left, H - MARGIN.bottom, W - MARGIN.right, H - MARGIN.bottom);
  for (const t of ttts) {
    svg.line(x(t), H - MARGIN.bottom, x(t), H - MARGIN.bottom + 4);
    svg.text(x(t), H - MARGIN.bottom + 18, String(t), 10, "middle");
  }
  for (let i = 0; i <= 4; i++) {
    const val = lo + ((hi - lo) * i) / 4;
    svg.line(MARGIN.left - 4, y(val), MARGIN.left, y(val));
    svg.text(MARGIN.left - 8, y(val) + 4, val.toFixed(1), 10, "end");
  }
  svg.text(MARGIN.left + plotW / 2, H - 12, "TTT (tics)", 11, "middle");
  svg.text(18, MARGIN.top - 8, yLabel, 11);

  velocities.forEach((v, vi) => {
    const color = SERIES_COLORS[vi % SERIES_COLORS.length];
    // nan cells split the series into disjoint segments
    let segment: Array<[number, number]> = [];
    for (const t of ttts) {
      const val = value(v, t);
      if (Number.isNaN(val)) {
        svg.polyline(segment, color);
        segment = [];
      } else {
        segment.push([x(t), y(val)]);
        svg.circle(x(t), y(val), 2, color);
      }
    }
    svg.polyline(segment, color);
    const ly = MARGIN.top + 16 + vi * 16;
    svg.line(W - MARGIN.right + 12, ly - 4, W - MARGIN.right + 34, ly - 4, color, 2);
    svg.text(W - MARGIN.right + 40, ly, `${v} km/h`, 11);
  });
  return svg.render();
}
