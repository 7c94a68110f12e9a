/*
The engine runs locally and is reached only through EngineRequest /
EngineResponse. CliEngine shells out to the installed `vpht` command;
FixtureEngine replays canned replies so views and tests never need the
engine binary. Both funnel replies through the same parsers, so the schema
version is checked on every path.
*/

import { spawn } from 'node:child_process';
import { mkdtempSync, rmSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

import {
  EngineRequest,
  EngineResponse,
  ResultByOp,
  exportGraph,
  parseResult,
  parseSetLines,
} from './schema';
import type { Edge } from './schema';

export interface RequestOptions {
  signal?: AbortSignal;
}

export interface Engine {
  request<R extends EngineRequest>(
    req: R,
    opts?: RequestOptions,
  ): Promise<EngineResponse<ResultByOp[R['op']]>>;
}

function fmtEdges(edges: Edge[]): string {
  return edges.map(([lo, hi]) => `${lo}-${hi}`).join(',');
}

/*
Requests become CLI invocations. Single-graph ops pass the graph inline;
pair ops write the graphs to a scratch directory in the same JSON format
the CLI reads, which doubles as the import/export format of the app.
*/
export function requestToArgs(
  req: EngineRequest,
  writeGraph: (name: string, text: string) => string,
): string[] {
  switch (req.op) {
    case 'diagram': {
      const { graph, direction } = req.payload;
      return [
        'diagram',
        '--n', String(graph.n),
        '--edges', fmtEdges(graph.edges),
        '--direction', direction,
      ];
    }
    case 'signature': {
      const { graph } = req.payload;
      return ['signature', '--n', String(graph.n), '--edges', fmtEdges(graph.edges)];
    }
    case 'collide': {
      const { graph, ignore_dangling } = req.payload;
      const args = ['collide', '--n', String(graph.n), '--edges', fmtEdges(graph.edges)];
      if (ignore_dangling) args.push('--ignore-dangling');
      return args;
    }
    case 'sets': {
      const p = req.payload;
      const args = ['sets', '--n', String(p.n)];
      if (p.base_edges && p.base_edges.length) {
        args.push('--base-edges', fmtEdges(p.base_edges));
      }
      if (p.ignore_dangling) args.push('--ignore-dangling');
      if (p.exclude_common) args.push('--exclude-common');
      if (p.jobs !== undefined) args.push('--jobs', String(p.jobs));
      return args;
    }
    case 'partition': {
      const p = req.payload;
      const args = [
        'partition',
        '--g1', writeGraph('g1.json', exportGraph(p.g1)),
        '--g2', writeGraph('g2.json', exportGraph(p.g2)),
      ];
      if (p.exclude_common) args.push('--exclude-common');
      return args;
    }
    case 'classify': {
      const p = req.payload;
      return [
        'classify',
        '--g1', writeGraph('g1.json', exportGraph(p.g1)),
        '--g2', writeGraph('g2.json', exportGraph(p.g2)),
      ];
    }
    case 'bench': {
      const p = req.payload;
      const args = ['bench', '--n', String(p.n)];
      if (p.jobs !== undefined) args.push('--jobs', String(p.jobs));
      if (p.force) args.push('--force');
      return args;
    }
  }
}

function parseReply<K extends keyof ResultByOp>(op: K, text: string): ResultByOp[K] {
  if (op === 'sets') return parseSetLines(text) as ResultByOp[K];
  return parseResult(op as Exclude<keyof ResultByOp, 'sets'>, text) as ResultByOp[K];
}

export class CliEngine implements Engine {
  constructor(private readonly command: string[] = ['vpht']) {}

  request<R extends EngineRequest>(
    req: R,
    opts: RequestOptions = {},
  ): Promise<EngineResponse<ResultByOp[R['op']]>> {
    const scratch = mkdtempSync(join(tmpdir(), 'vpht-ui-'));
    const writeGraph = (name: string, text: string): string => {
      const path = join(scratch, name);
      writeFileSync(path, text);
      return path;
    };
    const [cmd, ...pre] = this.command;
    const args = [...pre, ...requestToArgs(req, writeGraph)];
    return new Promise((resolve) => {
      const child = spawn(cmd!, args, { stdio: ['ignore', 'pipe', 'pipe'] });
      let out = '';
      let err = '';
      child.stdout.on('data', (d: Buffer) => (out += d.toString()));
      child.stderr.on('data', (d: Buffer) => (err += d.toString()));
      const onAbort = () => child.kill();
      opts.signal?.addEventListener('abort', onAbort, { once: true });
      child.on('error', (e) => {
        opts.signal?.removeEventListener('abort', onAbort);
        rmSync(scratch, { recursive: true, force: true });
        resolve({ ok: false, error: `engine not reachable: ${e.message}` });
      });
      child.on('close', (code, signal) => {
        opts.signal?.removeEventListener('abort', onAbort);
        rmSync(scratch, { recursive: true, force: true });
        if (signal || opts.signal?.aborted) {
          resolve({ ok: false, error: 'canceled' });
        } else if (code === 0) {
          try {
            resolve({ ok: true, result: parseReply(req.op, out) as ResultByOp[R['op']] });
          } catch (e) {
            resolve({ ok: false, error: (e as Error).message });
          }
        } else {
          const kind = code === 2 ? 'resource limit' : 'invalid input';
          resolve({ ok: false, error: `${kind}: ${err.trim() || `exit ${code}`}` });
        }
      });
    });
  }
}

/* Canned raw replies keyed by op, parsed exactly like real ones. */
export class FixtureEngine implements Engine {
  constructor(private readonly replies: Partial<Record<keyof ResultByOp, string>>) {}

  request<R extends EngineRequest>(
    req: R,
    opts: RequestOptions = {},
  ): Promise<EngineResponse<ResultByOp[R['op']]>> {
    if (opts.signal?.aborted) {
      return Promise.resolve({ ok: false, error: 'canceled' });
    }
    const raw = this.replies[req.op];
    if (raw === undefined) {
      return Promise.resolve({ ok: false, error: `no fixture for ${req.op}` });
    }
    try {
      return Promise.resolve({
        ok: true,
        result: parseReply(req.op, raw) as ResultByOp[R['op']],
      });
    } catch (e) {
      return Promise.resolve({ ok: false, error: (e as Error).message });
    }
  }
}

/*
One search in flight at a time. Launching a new one cancels the previous;
replies from canceled launches are dropped, so results land in launch order.
*/
export interface SearchEvents<T> {
  onStart?: () => void;
  onResult: (result: T) => void;
  onError: (message: string) => void;
}

export class SearchController {
  private seq = 0;
  private abort: AbortController | null = null;

  constructor(private readonly engine: Engine) {}

  busy(): boolean {
    return this.abort !== null;
  }

  launch<R extends EngineRequest>(req: R, events: SearchEvents<ResultByOp[R['op']]>): void {
    this.cancel();
    const mySeq = ++this.seq;
    const ac = new AbortController();
    this.abort = ac;
    events.onStart?.();
    void this.engine.request(req, { signal: ac.signal }).then((res) => {
      if (mySeq !== this.seq) return; // superseded, drop
      this.abort = null;
      if (res.ok) events.onResult(res.result);
      else events.onError(res.error);
    });
  }

  cancel(): void {
    if (this.abort) {
      this.abort.abort();
      this.abort = null;
      this.seq++;
    }
  }
}
