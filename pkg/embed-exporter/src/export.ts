import { spawnSync } from "node:child_process";
import { readFileSync, writeFileSync } from "node:fs";

import { DumpRow, parseSentenceDump } from "./dump.js";
import { Encoder, resolveEncoder } from "./encoders.js";

export interface ExportRequest {
  corpus?: string; // passed to the scorer CLI for a fresh sentence dump
  dumpFile?: string; // pre-made dump, used instead of spawning the scorer
  encoder: string;
  dim: number; // hashing encoder width; transformer encoders define their own
  bufferSize: number; // must match the scorer's chunking window
  output: string;
  primaryCommand: string; // e.g. "scigispy" or "python3 -m scigispy"
  batchSize?: number;
}

export interface SidecarRecord {
  doc_id: string;
  sent: number;
  vec: number[];
}

export function obtainDump(request: ExportRequest): string {
  if (request.dumpFile) {
    return readFileSync(request.dumpFile, "utf-8");
  }
  if (!request.corpus) {
    throw new Error("either a corpus path or a dump file is required");
  }
  const [command, ...prefix] = request.primaryCommand.split(/\s+/);
  const args = [
    ...prefix,
    "score",
    request.corpus,
    "--dump-sentences",
    "--buffer-size",
    String(request.bufferSize),
  ];
  const result = spawnSync(command, args, { encoding: "utf-8", maxBuffer: 1 << 28 });
  if (result.error) {
    throw new Error(`failed to run the scorer (${request.primaryCommand}): ${result.error.message}`);
  }
  if (result.status !== 0) {
    throw new Error(`scorer sentence dump failed (exit ${result.status}): ${result.stderr}`);
  }
  return result.stdout;
}

export async function encodeRows(
  rows: DumpRow[],
  encoder: Encoder,
  batchSize = 64
): Promise<SidecarRecord[]> {
  const records: SidecarRecord[] = [];
  let dim: number | null = null;
  for (let start = 0; start < rows.length; start += batchSize) {
    const batch = rows.slice(start, start + batchSize);
    const vectors = await encoder.encode(batch.map((row) => row.text));
    if (vectors.length !== batch.length) {
      throw new Error(`encoder returned ${vectors.length} vectors for a batch of ${batch.length}`);
    }
    for (let i = 0; i < batch.length; i++) {
      if (dim === null) {
        dim = vectors[i].length;
      } else if (vectors[i].length !== dim) {
        throw new Error(`dimension drift across batches: ${vectors[i].length} != ${dim}`);
      }
      records.push({ doc_id: batch[i].docId, sent: batch[i].sent, vec: vectors[i] });
    }
  }
  records.sort((a, b) => (a.doc_id < b.doc_id ? -1 : a.doc_id > b.doc_id ? 1 : a.sent - b.sent));
  return records;
}

export function formatSidecar(records: SidecarRecord[], encoder: Encoder, bufferSize: number): string {
  const dim = records.length > 0 ? records[0].vec.length : encoder.dim;
  const header =
    `# encoder=${encoder.id} pooling=${encoder.pooling} dim=${dim} buffer_size=${bufferSize}`;
  const lines = records.map((record) => JSON.stringify(record));
  return [header, ...lines].join("\n") + "\n";
}

export async function exportEmbeddings(request: ExportRequest): Promise<number> {
  if (request.bufferSize < 0) {
    throw new Error("buffer size must be >= 0");
  }
  const rows = parseSentenceDump(obtainDump(request));
  const encoder = resolveEncoder(request.encoder, request.dim);
  const records = await encodeRows(rows, encoder, request.batchSize ?? 64);
  writeFileSync(request.output, formatSidecar(records, encoder, request.bufferSize), "utf-8");
  return records.length;
}
