/*
Result-list logic for collision searches: filtering and sorting on the five
per-set metrics, plus pagination. Pure list-in list-out functions; the rows
come from the engine verbatim and ties keep the engine's deterministic
order (JS sort is stable).
*/

import type { CollisionSetRow, GraphPayload, SetMetrics } from './schema';

export type MetricKey = keyof SetMetrics;

export const METRIC_KEYS: MetricKey[] = [
  'components',
  'cycle_count',
  'off_diagonal_points',
  'longest_cycle',
  'has_nonpartitionable_pair',
];

export interface SortSpec {
  key: MetricKey;
  descending: boolean;
}

export interface FilterSpec {
  key: MetricKey;
  op: 'eq' | 'le' | 'ge';
  value: number | boolean;
}

export const NO_RESULTS_MESSAGE = 'no results will be returned';

function metricValue(row: CollisionSetRow, key: MetricKey): number {
  const m = row.metrics;
  if (m === null) throw new Error('rows without metrics cannot be filtered or sorted');
  const v = m[key];
  return typeof v === 'boolean' ? Number(v) : v;
}

export function applyControls(
  rows: CollisionSetRow[],
  controls: { filters?: FilterSpec[]; sort?: SortSpec },
): CollisionSetRow[] {
  let out = rows.slice();
  for (const f of controls.filters ?? []) {
    const want = Number(f.value);
    out = out.filter((r) => {
      const v = metricValue(r, f.key);
      return f.op === 'eq' ? v === want : f.op === 'le' ? v <= want : v >= want;
    });
  }
  if (controls.sort) {
    const { key, descending } = controls.sort;
    const sign = descending ? -1 : 1;
    out.sort((a, b) => sign * (metricValue(a, key) - metricValue(b, key)));
  }
  return out;
}

export interface Page<T> {
  items: T[];
  page: number;
  pageCount: number;
  total: number;
}

export function paginate<T>(rows: T[], page: number, pageSize: number): Page<T> {
  const pageCount = Math.max(1, Math.ceil(rows.length / pageSize));
  const clamped = Math.min(Math.max(page, 0), pageCount - 1);
  return {
    items: rows.slice(clamped * pageSize, (clamped + 1) * pageSize),
    page: clamped,
    pageCount,
    total: rows.length,
  };
}

/*
With "ignore dangling vertices" on, a drawn graph that itself has an
isolated vertex is excluded from its own search, so we surface the
engine's warning up front instead of running a search with no results.
*/
export function danglingBlocksResults(g: GraphPayload, ignoreDangling: boolean): string | null {
  if (!ignoreDangling) return null;
  const touched = new Set<number>();
  for (const [lo, hi] of g.edges) {
    touched.add(lo);
    touched.add(hi);
  }
  for (let v = 1; v <= g.n; v++) {
    if (!touched.has(v)) return NO_RESULTS_MESSAGE;
  }
  return null;
}
