/**
 * Plain-text table of average handover SINR, TTT rows by density columns,
 * for one case at the fixed study velocity. nan cells stay literal `nan`.
 */

import { AggregateRow, gridFor } from "./csv";

export const TABLE_VELOCITY_KMH = 50;

function cellText(value: number): string {
  return Number.isNaN(value) ? "nan" : value.toFixed(2);
}

export function renderTable(rows: AggregateRow[], caseLabel: string): string {
  const { ttts, densities, cell } = gridFor(rows, caseLabel, TABLE_VELOCITY_KMH);

  const header = ["TTT \\ density", ...densities.map(String)];
  const body: string[][] = ttts.map((t) => [
    String(t),
    ...densities.map((d) => cellText(cell.get(`${t}|${d}`)!.hoAvgSinrDb)),
  ]);

  const widths = header.map((h, col) =>
    Math.max(h.length, ...body.map((row) => row[col].length))
  );
  const renderRow = (row: string[]): string =>
    row.map((text, col) => text.padStart(widths[col])).join("  ");

  const lines = [
    `ho_avg_sinr (dB), case ${caseLabel}, velocity ${TABLE_VELOCITY_KMH} km/h`,
    renderRow(header),
    "-".repeat(widths.reduce((a, b) => a + b + 2, -2)),
    ...body.map(renderRow),
  ];
  return lines.join("\n") + "\n";
}
