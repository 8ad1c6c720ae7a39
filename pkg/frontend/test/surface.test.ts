import assert from "node:assert/strict";
import { test } from "node:test";

import { InputError, parseAggregateCsv } from "../src/csv";
import { renderSurface } from "../src/surface";
import { fullGrid, makeCsv } from "./helpers";

test("renders one quad per grid cell face", () => {
  const rows = parseAggregateCsv(makeCsv(fullGrid([1, 2, 3, 4], [10, 20, 30])));
  const svg = renderSurface(rows, "A");
  const quads = svg.match(/<polygon /g) ?? [];
  assert.equal(quads.length, 3 * 2); // (ttts-1) x (densities-1)
  assert.match(svg, /handover rate vs TTT and density \(case A\)/);
});

test("legend carries the z range; constant field collapses it", () => {
  const rows = parseAggregateCsv(
    makeCsv(fullGrid([1, 2], [10, 20], { rate: () => 3.5 }))
  );
  const svg = renderSurface(rows, "A");
  assert.match(svg, /min=3\.50 max=3\.50/);
});

test("degenerate grids are rejected", () => {
  const single = parseAggregateCsv(makeCsv(fullGrid([1], [10])));
  assert.throws(() => renderSurface(single, "A"), /at least a 2x2 grid/);
  const oneRow = parseAggregateCsv(makeCsv(fullGrid([1], [10, 20, 30])));
  assert.throws(() => renderSurface(oneRow, "A"), InputError);
});

test("missing cells are listed", () => {
  const cells = fullGrid([1, 2], [10, 20]).filter((c) => !(c.ttt === 2 && c.den === 20));
  const rows = parseAggregateCsv(makeCsv(cells));
  assert.throws(() => renderSurface(rows, "A"), /\(TTT=2, density=20\)/);
});

test("only the matching case and velocity are used", () => {
  const cells = fullGrid([1, 2], [10, 20]).concat(
    fullGrid([1, 2], [10, 20], { caseLabel: "B", rate: () => 9 }),
    fullGrid([1], [10], { vel: 30, rate: () => 9 })
  );
  const rows = parseAggregateCsv(makeCsv(cells));
  const svg = renderSurface(rows, "A");
  assert.doesNotMatch(svg, /max=9\.00/);
});

test("deterministic output", () => {
  const rows = parseAggregateCsv(makeCsv(fullGrid([1, 2, 3], [10, 20])));
  assert.equal(renderSurface(rows, "A"), renderSurface(rows, "A"));
});
