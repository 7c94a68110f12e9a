/*
Planar drawings become vertical graphs by projecting every vertex onto the
chosen sweep direction. The engine only ever sees the projected graph.
*/

import type { Edge, GraphPayload } from './schema';

export interface CanvasVertex {
  id: number;
  x: number;
  y: number;
}

export interface CanvasGraph {
  vertices: CanvasVertex[];
  /* pairs of vertex ids, in either order */
  edges: [number, number][];
  /* sweep direction in canvas coordinates; y grows downward on screen */
  direction: { x: number; y: number };
}

export type Projection =
  | { ok: true; graph: GraphPayload; heightOf: Map<number, number> }
  | { ok: false; reason: string; clash?: [number, number] };

/*
Two vertices landing on the same projected height make the vertical graph
ill-defined; we warn and block the search rather than nudge them apart.
*/
export function projectGraph(c: CanvasGraph): Projection {
  const { x: dx, y: dy } = c.direction;
  if (dx === 0 && dy === 0) {
    return { ok: false, reason: 'sweep direction must be a nonzero vector' };
  }
  // heights are dot products with the direction, in canvas coordinates;
  // y grows downward on screen, so sweeping screen-upward is {x: 0, y: -1}
  const ranked = c.vertices
    .map((v) => ({ id: v.id, h: v.x * dx + v.y * dy }))
    .sort((a, b) => a.h - b.h || a.id - b.id);
  for (let i = 1; i < ranked.length; i++) {
    const lo = ranked[i - 1]!;
    const hi = ranked[i]!;
    if (lo.h === hi.h) {
      return {
        ok: false,
        reason: `vertices ${lo.id} and ${hi.id} project to the same height`,
        clash: [lo.id, hi.id],
      };
    }
  }
  const heightOf = new Map<number, number>();
  ranked.forEach((v, i) => heightOf.set(v.id, i + 1));
  const edges: Edge[] = c.edges.map(([a, b]) => {
    const ha = heightOf.get(a);
    const hb = heightOf.get(b);
    if (ha === undefined || hb === undefined) {
      throw new Error(`edge [${a}, ${b}] references a missing vertex`);
    }
    return ha < hb ? [ha, hb] : [hb, ha];
  });
  edges.sort((p, q) => p[0] - q[0] || p[1] - q[1]);
  return { ok: true, graph: { n: c.vertices.length, edges }, heightOf };
}
