import { describe, expect, it } from 'vitest';

import type { CanvasGraph } from '../src/projection';
import { projectGraph } from '../src/projection';

const UP = { x: 0, y: -1 }; // screen y grows downward

function drawing(overrides: Partial<CanvasGraph> = {}): CanvasGraph {
  return {
    vertices: [
      { id: 1, x: 50, y: 200 },
      { id: 2, x: 120, y: 140 },
      { id: 3, x: 80, y: 60 },
    ],
    edges: [
      [1, 3],
      [2, 3],
    ],
    direction: UP,
    ...overrides,
  };
}

describe('projectGraph', () => {
  it('ranks vertices by projected height and normalizes edges', () => {
    const p = projectGraph(drawing());
    expect(p.ok).toBe(true);
    if (!p.ok) return;
    expect(p.graph.n).toBe(3);
    // screen-lowest vertex is height 1
    expect(p.heightOf.get(1)).toBe(1);
    expect(p.heightOf.get(2)).toBe(2);
    expect(p.heightOf.get(3)).toBe(3);
    expect(p.graph.edges).toEqual([
      [1, 3],
      [2, 3],
    ]);
  });

  it('reverses the order when the sweep flips', () => {
    const p = projectGraph(drawing({ direction: { x: 0, y: 1 } }));
    expect(p.ok).toBe(true);
    if (!p.ok) return;
    expect(p.heightOf.get(3)).toBe(1);
    expect(p.heightOf.get(1)).toBe(3);
  });

  it('projects along any direction vector', () => {
    // direction (1, 0): order by x alone, so 1 < 3 < 2
    const p = projectGraph(drawing({ direction: { x: 1, y: 0 } }));
    expect(p.ok).toBe(true);
    if (!p.ok) return;
    expect(p.heightOf.get(1)).toBe(1);
    expect(p.heightOf.get(3)).toBe(2);
    expect(p.heightOf.get(2)).toBe(3);
    expect(p.graph.edges).toEqual([
      [1, 2],
      [2, 3],
    ]);
  });

  it('blocks when two vertices project to the same height', () => {
    const p = projectGraph(
      drawing({
        vertices: [
          { id: 1, x: 50, y: 200 },
          { id: 2, x: 120, y: 200 },
          { id: 3, x: 80, y: 60 },
        ],
      }),
    );
    expect(p.ok).toBe(false);
    if (p.ok) return;
    expect(p.clash).toEqual([1, 2]);
    expect(p.reason).toContain('same height');
  });

  it('rejects a zero direction vector', () => {
    const p = projectGraph(drawing({ direction: { x: 0, y: 0 } }));
    expect(p.ok).toBe(false);
    if (p.ok) return;
    expect(p.reason).toContain('nonzero');
  });

  it('throws on edges to missing vertices', () => {
    expect(() => projectGraph(drawing({ edges: [[1, 9]] }))).toThrow(/missing vertex/);
  });
});
