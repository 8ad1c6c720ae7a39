#!/usr/bin/env node
/**
 * plot --input aggregate.csv --kind {surface|lines|table} [--case A|B] --out PATH
 *
 * surface: one SVG per invocation (--out is the file path)
 * lines:   two SVGs, rate_vs_ttt.svg and sinr_vs_ttt.svg (--out is a directory)
 * table:   plain text (--out file path, or stdout when omitted)
 *
 * Exit codes: 0 success, 2 bad flags or unusable input, 1 unexpected error.
 */

import { mkdirSync, statSync, writeFileSync } from "fs";
import { dirname, join } from "path";

import { InputError, readAggregateCsv } from "./csv";
import { renderVelocityLines } from "./lines";
import { renderSurface } from "./surface";
import { renderTable } from "./table";

const KINDS = ["surface", "lines", "table"] as const;
type Kind = (typeof KINDS)[number];

interface Args {
  input: string;
  kind: Kind;
  caseLabel: string;
  out?: string;
}

class UsageError extends Error {}

function parseArgs(argv: string[]): Args {
  const values = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    if (!flag.startsWith("--")) throw new UsageError(`unexpected argument ${flag}`);
    const value = argv[i + 1];
    if (value === undefined) throw new UsageError(`missing value for ${flag}`);
    values.set(flag.slice(2), value);
  }
  const known = new Set(["input", "kind", "case", "out"]);
  for (const key of values.keys()) {
    if (!known.has(key)) throw new UsageError(`unknown flag --${key}`);
  }
  const input = values.get("input");
  if (!input) throw new UsageError("--input is required");
  const kind = values.get("kind") as Kind | undefined;
  if (!kind || !KINDS.includes(kind)) {
    throw new UsageError(`--kind must be one of ${KINDS.join("|")}`);
  }
  const caseLabel = (values.get("case") ?? "A").toUpperCase();
  return { input, kind, caseLabel, out: values.get("out") };
}

function writeOut(path: string, content: string): void {
  mkdirSync(dirname(path) === "" ? "." : dirname(path), { recursive: true });
  writeFileSync(path, content, "utf-8");
  process.stdout.write(`wrote ${path}\n`);
}

export function main(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    process.stderr.write(`plot: ${(err as Error).message}\n`);
    return 2;
  }
  try {
    const rows = readAggregateCsv(args.input);
    if (args.kind === "surface") {
      const svg = renderSurface(rows, args.caseLabel);
      writeOut(args.out ?? `surface_case_${args.caseLabel}.svg`, svg);
    } else if (args.kind === "lines") {
      const outDir = args.out ?? ".";
      let isDir = false;
      try {
        isDir = statSync(outDir).isDirectory();
      } catch {
        mkdirSync(outDir, { recursive: true });
        isDir = true;
      }
      if (!isDir) throw new UsageError("--out must be a directory for --kind lines");
      const { rate, sinr } = renderVelocityLines(rows);
      writeOut(join(outDir, "rate_vs_ttt.svg"), rate);
      writeOut(join(outDir, "sinr_vs_ttt.svg"), sinr);
    } else {
      const text = renderTable(rows, args.caseLabel);
      if (args.out) {
        writeOut(args.out, text);
      } else {
        process.stdout.write(text);
      }
    }
    return 0;
  } catch (err) {
    if (err instanceof InputError || err instanceof UsageError) {
      process.stderr.write(`plot: ${(err as Error).message}\n`);
      return 2;
    }
    process.stderr.write(`plot: error: ${(err as Error).stack ?? err}\n`);
    return 1;
  }
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
