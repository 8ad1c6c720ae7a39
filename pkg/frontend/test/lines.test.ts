import assert from "node:assert/strict";
import { test } from "node:test";

import { parseAggregateCsv } from "../src/csv";
import { renderVelocityLines } from "../src/lines";
import { fullGrid, makeCsv } from "./helpers";

import type { CellSpec } from "./helpers";

function velocityCells(
  velocities: number[],
  ttts: number[],
  sinr: (v: number, t: number) => number | "nan" = (v, t) => v / 10 + t
): CellSpec[] {
  const cells: CellSpec[] = [];
  for (const v of velocities) {
    for (const t of ttts) {
      cells.push({
        caseLabel: "B",
        den: 20,
        ttt: t,
        vel: v,
        rate: 5 - t / 4 + v / 50,
        sinr: sinr(v, t),
      });
    }
  }
  return cells;
}

function countPolylines(svg: string): number {
  return (svg.match(/<polyline /g) ?? []).length;
}

test("one line per velocity in both charts", () => {
  const rows = parseAggregateCsv(makeCsv(velocityCells([10, 30, 50], [1, 2, 3, 4])));
  const { rate, sinr } = renderVelocityLines(rows);
  assert.equal(countPolylines(rate), 3); // legend swatches are <line>, not <polyline>
  assert.equal(countPolylines(sinr), 3);
  assert.match(rate, /10 km\/h/);
  assert.match(sinr, /50 km\/h/);
});

test("nan cells produce gaps, not zeros", () => {
  const rows = parseAggregateCsv(
    makeCsv(
      velocityCells([10], [1, 2, 3, 4, 5], (_v, t) => (t === 3 ? "nan" : 10 + t))
    )
  );
  const { sinr } = renderVelocityLines(rows);
  // the single series splits into two segments around the nan
  assert.equal(countPolylines(sinr), 2);
  assert.doesNotMatch(sinr, />0\.0</);
});

test("single velocity gives single-line charts", () => {
  const rows = parseAggregateCsv(makeCsv(velocityCells([50], [1, 2, 3])));
  const { rate } = renderVelocityLines(rows);
  assert.equal(countPolylines(rate), 1);
});

test("missing cells in the slice are reported", () => {
  const cells = velocityCells([10, 50], [1, 2]).filter(
    (c) => !(c.vel === 50 && c.ttt === 2)
  );
  const rows = parseAggregateCsv(makeCsv(cells));
  assert.throws(() => renderVelocityLines(rows), /velocity=50, TTT=2/);
});

test("rows outside case B density 20 are ignored", () => {
  const cells = velocityCells([10], [1, 2]).concat(fullGrid([1, 2], [10, 40]));
  const rows = parseAggregateCsv(makeCsv(cells));
  const { rate } = renderVelocityLines(rows);
  assert.equal(countPolylines(rate), 1);
});

test("deterministic output", () => {
  const rows = parseAggregateCsv(makeCsv(velocityCells([10, 20], [1, 2, 3])));
  const a = renderVelocityLines(rows);
  const b = renderVelocityLines(rows);
  assert.equal(a.rate, b.rate);
  assert.equal(a.sinr, b.sinr);
});
