/*
Alternating-cycle overlay for a selected colliding pair. Every cycle gets
its own color; up-arcs (first graph, walked upward) draw solid and
down-arcs (second graph, walked downward) draw dashed with a slight
perpendicular offset, so a 2-cycle's two traversals of the same edge stay
visible. No partition means exactly that, and the badge says so.
*/

import { PartitionResult, partitionFound } from './schema';

export interface Point {
  x: number;
  y: number;
}

export interface OverlayOptions {
  size?: number;
}

export const CYCLE_PALETTE = [
  '#e41a1c',
  '#377eb8',
  '#4daf4a',
  '#984ea3',
  '#ff7f00',
  '#a65628',
  '#f781bf',
  '#999999',
];

export const NO_PARTITION_BADGE = 'no partition exists';

function fmt(v: number): string {
  return String(Math.round(v * 100) / 100);
}

/* Default stacked layout for graphs nobody drew: vertex k at height k. */
export function verticalLayout(n: number, size = 300): Map<number, Point> {
  const margin = 30;
  const step = n > 1 ? (size - 2 * margin) / (n - 1) : 0;
  const out = new Map<number, Point>();
  for (let v = 1; v <= n; v++) {
    out.set(v, { x: size / 2, y: size - margin - (v - 1) * step });
  }
  return out;
}

export function renderCycles(
  positions: Map<number, Point>,
  partition: PartitionResult,
  opts: OverlayOptions = {},
): string {
  const size = opts.size ?? 300;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size} ${size}" class="vpht-cycles">`,
  );

  if (!partitionFound(partition)) {
    parts.push(
      `<text class="badge no-partition" x="${size / 2}" y="${size / 2}">${NO_PARTITION_BADGE}</text>`,
    );
    parts.push('</svg>');
    return parts.join('\n');
  }

  parts.push(
    `<text class="tuple-label" x="8" y="16">(${partition.tuple.join(', ')})</text>`,
  );
  partition.cycles.forEach((cycle, i) => {
    const color = CYCLE_PALETTE[i % CYCLE_PALETTE.length]!;
    parts.push(`<g class="cycle" data-cycle="${i}" stroke="${color}">`);
    for (const [tail, head, orient] of cycle) {
      const a = positions.get(tail);
      const b = positions.get(head);
      if (!a || !b) throw new Error(`no position for vertex ${a ? head : tail}`);
      let [ax, ay, bx, by] = [a.x, a.y, b.x, b.y];
      if (orient === 'down') {
        // shift perpendicular so the dashed pass does not hide the solid one
        const len = Math.hypot(bx - ax, by - ay) || 1;
        const ox = (3 * (by - ay)) / len;
        const oy = (3 * (ax - bx)) / len;
        [ax, ay, bx, by] = [ax + ox, ay + oy, bx + ox, by + oy];
      }
      const dash = orient === 'down' ? ' stroke-dasharray="6 4"' : '';
      parts.push(
        `<line class="arc ${orient}" x1="${fmt(ax)}" y1="${fmt(ay)}" x2="${fmt(bx)}" y2="${fmt(by)}"${dash}/>`,
      );
    }
    parts.push('</g>');
  });

  parts.push('<g class="vertices">');
  for (const [v, p] of [...positions.entries()].sort((a, b) => a[0] - b[0])) {
    parts.push(`<circle class="vertex" cx="${fmt(p.x)}" cy="${fmt(p.y)}" r="5"/>`);
    parts.push(`<text class="vertex-label" x="${fmt(p.x + 8)}" y="${fmt(p.y + 4)}">${v}</text>`);
  }
  parts.push('</g>');
  parts.push('</svg>');
  return parts.join('\n');
}
