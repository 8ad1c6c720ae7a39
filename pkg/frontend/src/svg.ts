/** Minimal deterministic SVG assembly: fixed float formatting, no timestamps. */

export function fmt(x: number): string {
  // fixed 2-decimal coordinates keep output bytes stable across platforms
  return x.toFixed(2);
}

export class Svg {
  private parts: string[] = [];

  constructor(readonly width: number, readonly height: number) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
        `viewBox="0 0 ${width} ${height}">`
    );
    this.parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  }

  line(x1: number, y1: number, x2: number, y2: number, stroke = "#444", width = 1): void {
    this.parts.push(
      `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" ` +
        `stroke="${stroke}" stroke-width="${width}"/>`
    );
  }

  polyline(points: Array<[number, number]>, stroke: string, width = 1.5): void {
    if (points.length === 0) return;
    const attr = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    this.parts.push(
      `<polyline points="${attr}" fill="none" stroke="${stroke}" stroke-width="${width}"/>`
    );
  }

  polygon(points: Array<[number, number]>, fill: string, stroke = "#333"): void {
    const attr = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    this.parts.push(
      `<polygon points="${attr}" fill="${fill}" stroke="${stroke}" stroke-width="0.5"/>`
    );
  }

  circle(x: number, y: number, r: number, fill: string): void {
    this.parts.push(`<circle cx="${fmt(x)}" cy="${fmt(y)}" r="${r}" fill="${fill}"/>`);
  }

  text(x: number, y: number, content: string, size = 11, anchor = "start"): void {
    this.parts.push(
      `<text x="${fmt(x)}" y="${fmt(y)}" font-family="sans-serif" font-size="${size}" ` +
        `text-anchor="${anchor}">${escapeXml(content)}</text>`
    );
  }

  render(): string {
    return this.parts.join("\n") + "\n</svg>\n";
  }
}

function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Blue-to-red ramp over [lo, hi]; constant fields render mid-ramp. */
export function colorRamp(value: number, lo: number, hi: number): string {
  const t = hi > lo ? Math.min(1, Math.max(0, (value - lo) / (hi - lo))) : 0.5;
  const r = Math.round(40 + t * 200);
  const g = Math.round(70 + (1 - Math.abs(t - 0.5) * 2) * 120);
  const b = Math.round(220 - t * 180);
  return `rgb(${r},${g},${b})`;
}

export const SERIES_COLORS = ["#1f6fb4", "#d84b2a", "#2d8a4e", "#8a52a3", "#b58b00", "#446"];
