import { AGGREGATE_HEADER } from "../src/csv";

export interface CellSpec {
  caseLabel?: string;
  den: number;
  ttt: number;
  vel?: number;
  rate?: number;
  sinr?: number | "nan";
}

/** Build a syntactically valid aggregate.csv from cell specs. */
export function makeCsv(cells: CellSpec[]): string {
  const lines = [AGGREGATE_HEADER];
  for (const c of cells) {
    const sinr = c.sinr === "nan" ? "nan" : (c.sinr ?? 10).toFixed(4);
    const rate = (c.rate ?? 1).toFixed(4);
    const failure = (c.rate ?? 1) < 1 ? "true" : "false";
    lines.push(
      `${c.caseLabel ?? "A"},${c.den},${c.ttt},${c.vel ?? 50},100,${rate},${sinr},${failure}`
    );
  }
  return lines.join("\n") + "\n";
}

/** Full ttt x density grid of cells for one case/velocity. */
export function fullGrid(
  ttts: number[],
  densities: number[],
  opts: { caseLabel?: string; vel?: number; sinr?: (t: number, d: number) => number | "nan"; rate?: (t: number, d: number) => number } = {}
): CellSpec[] {
  const cells: CellSpec[] = [];
  for (const t of ttts) {
    for (const d of densities) {
      cells.push({
        caseLabel: opts.caseLabel ?? "A",
        den: d,
        ttt: t,
        vel: opts.vel ?? 50,
        rate: opts.rate ? opts.rate(t, d) : 2 + d / 10 - t / 12,
        sinr: opts.sinr ? opts.sinr(t, d) : t + d / 10,
      });
    }
  }
  return cells;
}
