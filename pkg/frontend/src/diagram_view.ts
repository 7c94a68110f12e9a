/*
Verbose diagram scatter. A pure function of the engine's diagram JSON, so
renders are snapshot-testable: same response, same markup. Points sit at
(birth, death), infinite deaths get a dedicated row above the plot, and the
diagonal is drawn since verbose diagrams keep their diagonal points.
*/

import type { DiagramResult, PersistencePoint } from './schema';

export interface DiagramViewOptions {
  size?: number;
  highlight?: PersistencePoint[];
}

const MARGIN = 34;
const INF_GAP = 18;

function fmt(v: number): string {
  return String(Math.round(v * 100) / 100);
}

function samePoint(a: PersistencePoint, b: PersistencePoint): boolean {
  return a[0] === b[0] && a[1] === b[1];
}

export function renderDiagram(d: DiagramResult, opts: DiagramViewOptions = {}): string {
  const size = opts.size ?? 300;
  const highlight = opts.highlight ?? [];
  const plot = size - 2 * MARGIN;
  const finite: number[] = [];
  for (const [b, x] of [...d.dim0, ...d.dim1]) {
    finite.push(b);
    if (x !== 'inf') finite.push(x);
  }
  // domain [0, top]; an empty diagram still renders a frame
  const top = finite.length ? Math.max(...finite) + 1 : 1;
  const sx = (v: number) => MARGIN + (v / top) * plot;
  const sy = (v: number) => MARGIN + plot - (v / top) * plot;
  const infY = MARGIN - INF_GAP;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size} ${size}" class="vpht-diagram" data-direction="${d.direction}">`,
  );
  parts.push(`<rect class="frame" x="${MARGIN}" y="${MARGIN}" width="${plot}" height="${plot}"/>`);
  parts.push(
    `<line class="inf-row" x1="${MARGIN}" y1="${infY}" x2="${MARGIN + plot}" y2="${infY}"/>`,
  );
  parts.push(`<text class="inf-label" x="${MARGIN - 10}" y="${infY + 4}">∞</text>`);
  parts.push(
    `<line class="diagonal" x1="${fmt(sx(0))}" y1="${fmt(sy(0))}" x2="${fmt(sx(top))}" y2="${fmt(sy(top))}"/>`,
  );
  parts.push(`<text class="direction-label" x="${MARGIN}" y="${size - 8}">${d.direction}</text>`);

  const seen: PersistencePoint[] = [];
  const render = (pt: PersistencePoint, dim: 0 | 1): string => {
    const [birth, death] = pt;
    // nudge repeated identical points sideways so multiplicity stays visible
    const repeats = seen.filter((q) => samePoint(q, pt)).length;
    seen.push(pt);
    const cx = sx(birth) + 4 * repeats;
    const cy = death === 'inf' ? infY : sy(death);
    const hl = highlight.some((h) => samePoint(h, pt)) ? ' highlight' : '';
    if (dim === 0) {
      return `<circle class="dim0${hl}" cx="${fmt(cx)}" cy="${fmt(cy)}" r="4"/>`;
    }
    return `<rect class="dim1${hl}" x="${fmt(cx - 3.5)}" y="${fmt(cy - 3.5)}" width="7" height="7"/>`;
  };

  parts.push('<g class="points">');
  for (const pt of d.dim0) parts.push(render(pt, 0));
  for (const pt of d.dim1) parts.push(render(pt, 1));
  parts.push('</g>');
  parts.push('</svg>');
  return parts.join('\n');
}
