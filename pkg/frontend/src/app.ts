/*
Headless application shell: canvas state, projection guard, live diagrams,
searches, pair selection, import/export. Views stay pure string renderers,
so the whole app is testable without a DOM; a thin bootstrap can pour the
rendered strings into elements and forward pointer events here.

Every number on screen comes from an engine response. The UI computes no
topology, only screen geometry.
*/

import type { Engine } from './engine';
import { SearchController } from './engine';
import type { CanvasGraph, Projection } from './projection';
import { projectGraph } from './projection';
import type {
  CollideResult,
  CollisionSetRow,
  GraphPayload,
  SignatureResult,
} from './schema';
import { exportGraph, importGraph, partitionFound } from './schema';
import type { FilterSpec, Page, SortSpec } from './search_view';
import { applyControls, danglingBlocksResults, paginate } from './search_view';
import { renderDiagram } from './diagram_view';
import { renderCycles, verticalLayout, NO_PARTITION_BADGE } from './cycles_view';

export type SearchKind = 'colliding-graphs' | 'collision-sets';

export interface SearchOptions {
  ignore_dangling?: boolean;
  exclude_common?: boolean;
}

export type SearchStatus =
  | { state: 'idle' }
  | { state: 'running'; kind: SearchKind }
  | { state: 'done'; kind: SearchKind }
  | { state: 'error'; message: string };

export class App {
  canvas: CanvasGraph = { vertices: [], edges: [], direction: { x: 0, y: -1 } };
  /* signature response for the drawn graph: both diagrams plus the hash */
  signature: SignatureResult | null = null;
  warning: string | null = null;
  status: SearchStatus = { state: 'idle' };
  collideResult: CollideResult | null = null;
  setsResult: CollisionSetRow[] | null = null;
  filters: FilterSpec[] = [];
  sort: SortSpec | undefined;
  page = 0;
  pageSize = 20;
  overlay: string | null = null;

  private nextId = 1;
  private listeners: (() => void)[] = [];
  private readonly live: SearchController;
  private readonly search: SearchController;
  private readonly pair: SearchController;

  constructor(engine: Engine) {
    this.live = new SearchController(engine);
    this.search = new SearchController(engine);
    this.pair = new SearchController(engine);
  }

  onChange(fn: () => void): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn();
  }

  /* ---------------------------------------------------------------- */
  /* drawing */

  addVertex(x: number, y: number): number {
    const id = this.nextId++;
    this.canvas.vertices.push({ id, x, y });
    this.refreshSignature();
    return id;
  }

  moveVertex(id: number, x: number, y: number): void {
    const v = this.canvas.vertices.find((u) => u.id === id);
    if (!v) return;
    v.x = x;
    v.y = y;
    this.refreshSignature();
  }

  toggleEdge(a: number, b: number): void {
    const i = this.canvas.edges.findIndex(
      ([p, q]) => (p === a && q === b) || (p === b && q === a),
    );
    if (i >= 0) this.canvas.edges.splice(i, 1);
    else this.canvas.edges.push([a, b]);
    this.refreshSignature();
  }

  setDirection(x: number, y: number): void {
    this.canvas.direction = { x, y };
    this.refreshSignature();
  }

  projected(): Projection {
    return projectGraph(this.canvas);
  }

  /* live diagrams: one signature request per edit, both directions at once */
  private refreshSignature(): void {
    const proj = this.projected();
    if (!proj.ok) {
      this.live.cancel(); // a stale reply must not resurrect the old diagrams
      this.warning = proj.reason;
      this.signature = null;
      this.emit();
      return;
    }
    this.warning = null;
    this.live.launch(
      { op: 'signature', payload: { graph: proj.graph } },
      {
        onResult: (sig) => {
          this.signature = sig;
          this.emit();
        },
        onError: (message) => {
          this.warning = message;
          this.emit();
        },
      },
    );
    this.emit();
  }

  renderDiagrams(): { up: string; down: string } | null {
    if (!this.signature) return null;
    const { up, down } = this.signature;
    return {
      up: renderDiagram({ schema: this.signature.schema, ...up }),
      down: renderDiagram({ schema: this.signature.schema, ...down }),
    };
  }

  /* ---------------------------------------------------------------- */
  /* searches */

  runSearch(kind: SearchKind, options: SearchOptions = {}): void {
    const proj = this.projected();
    if (!proj.ok) {
      this.status = { state: 'error', message: proj.reason };
      this.emit();
      return;
    }
    const g = proj.graph;
    const blocked = danglingBlocksResults(g, options.ignore_dangling ?? false);
    if (blocked && kind === 'colliding-graphs') {
      this.status = { state: 'error', message: blocked };
      this.emit();
      return;
    }
    this.status = { state: 'running', kind };
    this.page = 0;
    if (kind === 'colliding-graphs') {
      this.search.launch(
        {
          op: 'collide',
          payload: { graph: g, ignore_dangling: options.ignore_dangling },
        },
        {
          onResult: (r) => {
            this.collideResult = r;
            this.status = { state: 'done', kind };
            this.emit();
          },
          onError: (message) => {
            this.status = { state: 'error', message };
            this.emit();
          },
        },
      );
    } else {
      this.search.launch(
        {
          op: 'sets',
          payload: {
            n: g.n,
            ignore_dangling: options.ignore_dangling,
            exclude_common: options.exclude_common,
          },
        },
        {
          onResult: (rows) => {
            this.setsResult = rows;
            this.status = { state: 'done', kind };
            this.emit();
          },
          onError: (message) => {
            this.status = { state: 'error', message };
            this.emit();
          },
        },
      );
    }
    this.emit();
  }

  cancelSearch(): void {
    this.search.cancel();
    this.status = { state: 'idle' };
    this.emit();
  }

  setControls(controls: { filters?: FilterSpec[]; sort?: SortSpec }): void {
    this.filters = controls.filters ?? [];
    this.sort = controls.sort;
    this.page = 0;
    this.emit();
  }

  visibleSets(): Page<CollisionSetRow> {
    const rows = this.setsResult ?? [];
    const shaped = applyControls(rows, { filters: this.filters, sort: this.sort });
    return paginate(shaped, this.page, this.pageSize);
  }

  /* ---------------------------------------------------------------- */
  /* cycles overlay */

  showCycles(g1: GraphPayload, g2: GraphPayload, excludeCommon = false): void {
    this.pair.launch(
      {
        op: 'partition',
        payload: { g1, g2, exclude_common: excludeCommon },
      },
      {
        onResult: (p) => {
          this.overlay = renderCycles(verticalLayout(g1.n), p);
          if (!partitionFound(p)) this.warning = NO_PARTITION_BADGE;
          this.emit();
        },
        onError: (message) => {
          this.warning = message;
          this.emit();
        },
      },
    );
  }

  /* ---------------------------------------------------------------- */
  /* graph files, shared verbatim with the engine CLI */

  exportDrawing(): string {
    const proj = this.projected();
    if (!proj.ok) throw new Error(proj.reason);
    return exportGraph(proj.graph);
  }

  importDrawing(text: string): void {
    const g = importGraph(text);
    const layout = verticalLayout(g.n);
    this.canvas = {
      vertices: [...layout.entries()].map(([id, p]) => ({ id, x: p.x, y: p.y })),
      edges: g.edges.map(([lo, hi]) => [lo, hi]),
      direction: { x: 0, y: -1 },
    };
    this.nextId = g.n + 1;
    this.refreshSignature();
  }
}
