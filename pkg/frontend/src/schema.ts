/*
Wire contract with the engine. Every type here mirrors the engine's JSON
output field for field; the UI never derives topology itself, it only
renders what these carry. All engine output is schema-versioned and every
parse checks the version before anything else.
*/

export const SCHEMA_VERSION = 1;

export type SweepDirection = 'up' | 'down';

/* [birth, death]; infinite deaths arrive as the string "inf". */
export type PersistencePoint = [number, number | 'inf'];

/* Edges are [lower, higher] vertex pairs, vertices numbered 1..n by height. */
export type Edge = [number, number];

export interface GraphPayload {
  n: number;
  edges: Edge[];
}

export interface DiagramResult {
  schema: number;
  direction: SweepDirection;
  dim0: PersistencePoint[];
  dim1: PersistencePoint[];
}

export interface SignatureResult {
  schema: number;
  n: number;
  hash: string;
  up: { direction: SweepDirection; dim0: PersistencePoint[]; dim1: PersistencePoint[] };
  down: { direction: SweepDirection; dim0: PersistencePoint[]; dim1: PersistencePoint[] };
}

export interface CollideResult {
  schema: number;
  n: number;
  count: number;
  graphs: Edge[][];
}

/* [tail, head, orientation]; up-arcs walk edges of the first graph upward,
   down-arcs walk edges of the second graph downward. */
export type CycleArc = [number, number, 'up' | 'down'];

export interface PartitionFound {
  schema: number;
  cycles: CycleArc[][];
  tuple: number[];
}

export interface PartitionMissing {
  schema: number;
  partitionable: false;
}

export type PartitionResult = PartitionFound | PartitionMissing;

export function partitionFound(p: PartitionResult): p is PartitionFound {
  return !('partitionable' in p);
}

export interface SetMetrics {
  components: number;
  cycle_count: number;
  off_diagonal_points: number;
  longest_cycle: number;
  has_nonpartitionable_pair: boolean;
}

export interface CollisionSetRow {
  schema: number;
  n: number;
  hash: string;
  members: Edge[][];
  metrics: SetMetrics | null;
}

export interface ClassifyResult {
  schema: number;
  colliding: boolean;
  signatures_equal: boolean;
  /* a partition body when colliding, a balance-violating vertex when not */
  witness: { cycles: CycleArc[][]; tuple: number[] } | number;
}

export interface BenchResult {
  schema: number;
  n: number;
  jobs: number;
  graphs: number;
  sets: number;
  seconds: number;
  graphs_per_second: number;
}

/* ------------------------------------------------------------------ */
/* requests */

export interface DiagramRequest {
  op: 'diagram';
  payload: { graph: GraphPayload; direction: SweepDirection };
}

export interface SignatureRequest {
  op: 'signature';
  payload: { graph: GraphPayload };
}

export interface CollideRequest {
  op: 'collide';
  payload: { graph: GraphPayload; ignore_dangling?: boolean };
}

export interface SetsRequest {
  op: 'sets';
  payload: {
    n: number;
    base_edges?: Edge[];
    ignore_dangling?: boolean;
    exclude_common?: boolean;
    jobs?: number;
  };
}

export interface PartitionRequest {
  op: 'partition';
  payload: { g1: GraphPayload; g2: GraphPayload; exclude_common?: boolean };
}

export interface ClassifyRequest {
  op: 'classify';
  payload: { g1: GraphPayload; g2: GraphPayload };
}

export interface BenchRequest {
  op: 'bench';
  payload: { n: number; jobs?: number; force?: boolean };
}

export type EngineRequest =
  | DiagramRequest
  | SignatureRequest
  | CollideRequest
  | SetsRequest
  | PartitionRequest
  | ClassifyRequest
  | BenchRequest;

export interface ResultByOp {
  diagram: DiagramResult;
  signature: SignatureResult;
  collide: CollideResult;
  sets: CollisionSetRow[];
  partition: PartitionResult;
  classify: ClassifyResult;
  bench: BenchResult;
}

export type EngineResponse<T> =
  | { ok: true; result: T }
  | { ok: false; error: string };

export class SchemaMismatchError extends Error {
  constructor(got: unknown) {
    super(`engine spoke schema ${String(got)}, this UI needs ${SCHEMA_VERSION}`);
    this.name = 'SchemaMismatchError';
  }
}

function checkVersion(obj: unknown): void {
  const schema = (obj as { schema?: unknown }).schema;
  if (schema !== SCHEMA_VERSION) throw new SchemaMismatchError(schema);
}

/* One engine reply (a single JSON object) to a typed result. */
export function parseResult<K extends Exclude<keyof ResultByOp, 'sets'>>(
  op: K,
  text: string,
): ResultByOp[K] {
  const obj: unknown = JSON.parse(text);
  checkVersion(obj);
  return obj as ResultByOp[K];
}

/* `sets` replies are JSON lines, one collision set per line. */
export function parseSetLines(text: string): CollisionSetRow[] {
  const rows: CollisionSetRow[] = [];
  for (const line of text.split('\n')) {
    if (!line.trim()) continue;
    const obj: unknown = JSON.parse(line);
    checkVersion(obj);
    rows.push(obj as CollisionSetRow);
  }
  return rows;
}

/* Graph JSON files are shared verbatim with the engine CLI. */
export function exportGraph(g: GraphPayload): string {
  return JSON.stringify({ n: g.n, edges: g.edges });
}

export function importGraph(text: string): GraphPayload {
  const obj = JSON.parse(text) as { n?: unknown; edges?: unknown };
  if (typeof obj.n !== 'number' || !Array.isArray(obj.edges)) {
    throw new Error('graph JSON needs {"n": int, "edges": [[low, high], ...]}');
  }
  for (const e of obj.edges) {
    if (!Array.isArray(e) || e.length !== 2) {
      throw new Error(`bad edge ${JSON.stringify(e)}`);
    }
  }
  return { n: obj.n, edges: obj.edges as Edge[] };
}
