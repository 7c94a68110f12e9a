import { describe, expect, it } from 'vitest';

import { parseSetLines } from '../src/schema';
import {
  METRIC_KEYS,
  NO_RESULTS_MESSAGE,
  applyControls,
  danglingBlocksResults,
  paginate,
} from '../src/search_view';
import { fixture } from './helpers';

const rows = parseSetLines(fixture('sets_n5.jsonl'));

describe('applyControls', () => {
  it('filters on each metric', () => {
    const singles = applyControls(rows, {
      filters: [{ key: 'components', op: 'eq', value: 1 }],
    });
    expect(singles.length).toBeGreaterThan(0);
    expect(singles.length).toBeLessThan(rows.length);
    for (const r of singles) expect(r.metrics!.components).toBe(1);

    const cyclic = applyControls(rows, {
      filters: [{ key: 'cycle_count', op: 'ge', value: 1 }],
    });
    for (const r of cyclic) expect(r.metrics!.cycle_count).toBeGreaterThanOrEqual(1);

    const small = applyControls(rows, {
      filters: [{ key: 'off_diagonal_points', op: 'le', value: 3 }],
    });
    for (const r of small) expect(r.metrics!.off_diagonal_points).toBeLessThanOrEqual(3);
  });

  it('finds no nonpartitionable pairs in a real universe', () => {
    const bad = applyControls(rows, {
      filters: [{ key: 'has_nonpartitionable_pair', op: 'eq', value: true }],
    });
    expect(bad).toHaveLength(0);
  });

  it('stacks filters', () => {
    const both = applyControls(rows, {
      filters: [
        { key: 'components', op: 'eq', value: 1 },
        { key: 'longest_cycle', op: 'ge', value: 6 },
      ],
    });
    for (const r of both) {
      expect(r.metrics!.components).toBe(1);
      expect(r.metrics!.longest_cycle).toBeGreaterThanOrEqual(6);
    }
  });

  it('sorts ascending and descending on every metric', () => {
    for (const key of METRIC_KEYS) {
      const asc = applyControls(rows, { sort: { key, descending: false } });
      const vals = asc.map((r) => Number(r.metrics![key]));
      for (let i = 1; i < vals.length; i++) expect(vals[i]!).toBeGreaterThanOrEqual(vals[i - 1]!);
      const desc = applyControls(rows, { sort: { key, descending: true } });
      const dvals = desc.map((r) => Number(r.metrics![key]));
      for (let i = 1; i < dvals.length; i++) expect(dvals[i]!).toBeLessThanOrEqual(dvals[i - 1]!);
    }
  });

  it('keeps the engine order on ties', () => {
    const asc = applyControls(rows, { sort: { key: 'components', descending: false } });
    const engineIndex = new Map(rows.map((r, i) => [r.hash, i]));
    for (let i = 1; i < asc.length; i++) {
      if (asc[i]!.metrics!.components === asc[i - 1]!.metrics!.components) {
        expect(engineIndex.get(asc[i]!.hash)!).toBeGreaterThan(
          engineIndex.get(asc[i - 1]!.hash)!,
        );
      }
    }
  });

  it('does not mutate the input', () => {
    const before = rows.map((r) => r.hash);
    applyControls(rows, { sort: { key: 'longest_cycle', descending: true } });
    expect(rows.map((r) => r.hash)).toEqual(before);
  });
});

describe('paginate', () => {
  it('splits rows into fixed pages', () => {
    const page = paginate(rows, 0, 20);
    expect(page.items).toHaveLength(20);
    expect(page.total).toBe(rows.length);
    expect(page.pageCount).toBe(Math.ceil(rows.length / 20));
    const last = paginate(rows, page.pageCount - 1, 20);
    expect(last.items.length).toBeGreaterThan(0);
    expect(last.items.length).toBeLessThanOrEqual(20);
  });

  it('clamps out-of-range pages', () => {
    expect(paginate(rows, 999, 20).page).toBe(Math.ceil(rows.length / 20) - 1);
    expect(paginate(rows, -5, 20).page).toBe(0);
    expect(paginate([], 0, 20).pageCount).toBe(1);
  });
});

describe('danglingBlocksResults', () => {
  const dangling = { n: 4, edges: [[1, 3]] as [number, number][] };
  const covered = { n: 2, edges: [[1, 2]] as [number, number][] };

  it('warns when the drawn graph would be excluded', () => {
    expect(danglingBlocksResults(dangling, true)).toBe(NO_RESULTS_MESSAGE);
  });

  it('stays quiet otherwise', () => {
    expect(danglingBlocksResults(dangling, false)).toBeNull();
    expect(danglingBlocksResults(covered, true)).toBeNull();
  });
});
