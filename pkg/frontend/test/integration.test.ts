/**
 * End-to-end against a real simulator output: test/fixtures/aggregate.csv
 * was produced by `udnsim sweep --case A,B --density 10,20,50 --ttt 1-3
 * --velocity 10,50 --replicates 3 --seed 7`.
 */

import assert from "node:assert/strict";
import { readFileSync } from "node:fs";
import { join } from "node:path";
import { test } from "node:test";

import { readAggregateCsv } from "../src/csv";
import { renderVelocityLines } from "../src/lines";
import { renderSurface } from "../src/surface";
import { renderTable } from "../src/table";

const FIXTURE = join(__dirname, "..", "..", "test", "fixtures", "aggregate.csv");

test("fixture parses with full row count", () => {
  const rows = readAggregateCsv(FIXTURE);
  assert.equal(rows.length, 2 * 3 * 3 * 2);
  assert.ok(rows.every((r) => r.replicates === 3));
});

test("surface renders for both cases", () => {
  const rows = readAggregateCsv(FIXTURE);
  for (const label of ["A", "B"]) {
    const svg = renderSurface(rows, label);
    assert.match(svg, /<svg /);
    assert.equal((svg.match(/<polygon /g) ?? []).length, (3 - 1) * (3 - 1));
  }
});

test("velocity lines render from the density-20 slice", () => {
  const rows = readAggregateCsv(FIXTURE);
  const { rate, sinr } = renderVelocityLines(rows);
  assert.match(rate, /10 km\/h/);
  assert.match(rate, /50 km\/h/);
  assert.ok(sinr.includes("<polyline") || sinr.includes("<circle"));
});

test("tables render with one row per TTT", () => {
  const rows = readAggregateCsv(FIXTURE);
  const text = renderTable(rows, "B");
  const lines = text.trimEnd().split("\n");
  assert.equal(lines.length, 3 + 3); // title, header, rule, 3 TTT rows
  const raw = readFileSync(FIXTURE, "utf-8");
  assert.equal(raw, readFileSync(FIXTURE, "utf-8")); // input untouched
});
