/**
 * Reader for the simulator's aggregate.csv.
 *
 * Columns (fixed order, one header line):
 *   case,den_gnb,ttt_tics,velocity_kmh,replicates,mean_ho_rate,ho_avg_sinr_db,failure_flag
 * Missing KPI values are the literal `nan`; booleans are `true`/`false`.
 */

import { readFileSync } from "fs";

export const AGGREGATE_HEADER =
  "case,den_gnb,ttt_tics,velocity_kmh,replicates,mean_ho_rate,ho_avg_sinr_db,failure_flag";

export interface AggregateRow {
  caseLabel: string;
  denGnb: number;
  tttTics: number;
  velocityKmh: number;
  replicates: number;
  meanHoRate: number;
  hoAvgSinrDb: number; // NaN for scenarios with no handover events
  failureFlag: boolean;
}

export class InputError extends Error {}

function parseNumber(raw: string, where: string): number {
  if (raw === "nan") return NaN;
  const value = Number(raw);
  if (raw === "" || Number.isNaN(value)) {
    throw new InputError(`${where}: cannot parse number from ${JSON.stringify(raw)}`);
  }
  return value;
}

function parseBool(raw: string, where: string): boolean {
  if (raw === "true") return true;
  if (raw === "false") return false;
  throw new InputError(`${where}: expected true/false, got ${JSON.stringify(raw)}`);
}

export function parseAggregateCsv(content: string, name = "aggregate.csv"): AggregateRow[] {
  const lines = content.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0 || lines[0] !== AGGREGATE_HEADER) {
    throw new InputError(`${name}: expected header ${JSON.stringify(AGGREGATE_HEADER)}`);
  }
  const rows: AggregateRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const where = `${name}:${i + 1}`;
    const parts = lines[i].split(",");
    if (parts.length !== 8) {
      throw new InputError(`${where}: expected 8 columns, got ${parts.length}`);
    }
    rows.push({
      caseLabel: parts[0],
      denGnb: parseNumber(parts[1], where),
      tttTics: parseNumber(parts[2], where),
      velocityKmh: parseNumber(parts[3], where),
      replicates: parseNumber(parts[4], where),
      meanHoRate: parseNumber(parts[5], where),
      hoAvgSinrDb: parseNumber(parts[6], where),
      failureFlag: parseBool(parts[7], where),
    });
  }
  return rows;
}

export function readAggregateCsv(path: string): AggregateRow[] {
  let content: string;
  try {
    content = readFileSync(path, "utf-8");
  } catch (err) {
    throw new InputError(`cannot read ${path}: ${(err as Error).message}`);
  }
  return parseAggregateCsv(content, path);
}

/** Unique sorted values of a numeric field. */
export function axisValues(rows: AggregateRow[], pick: (r: AggregateRow) => number): number[] {
  return [...new Set(rows.map(pick))].sort((a, b) => a - b);
}

/**
 * Arrange rows into a complete (ttt x density) grid for one case/velocity.
 * Throws listing every missing cell; duplicate cells are also rejected.
 */
export function gridFor(
  rows: AggregateRow[],
  caseLabel: string,
  velocityKmh: number
): { ttts: number[]; densities: number[]; cell: Map<string, AggregateRow> } {
  const slice = rows.filter(
    (r) => r.caseLabel === caseLabel && r.velocityKmh === velocityKmh
  );
  if (slice.length === 0) {
    throw new InputError(`no rows for case ${caseLabel} at velocity ${velocityKmh}`);
  }
  const ttts = axisValues(slice, (r) => r.tttTics);
  const densities = axisValues(slice, (r) => r.denGnb);
  const cell = new Map<string, AggregateRow>();
  for (const row of slice) {
    const key = `${row.tttTics}|${row.denGnb}`;
    if (cell.has(key)) {
      throw new InputError(`duplicate cell for TTT=${row.tttTics} density=${row.denGnb}`);
    }
    cell.set(key, row);
  }
  const missing: string[] = [];
  for (const t of ttts) {
    for (const d of densities) {
      if (!cell.has(`${t}|${d}`)) missing.push(`(TTT=${t}, density=${d})`);
    }
  }
  if (missing.length > 0) {
    throw new InputError(`incomplete grid, missing cells: ${missing.join(", ")}`);
  }
  return { ttts, densities, cell };
}
