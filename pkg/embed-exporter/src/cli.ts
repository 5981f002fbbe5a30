#!/usr/bin/env node
// embed-exporter: encode a corpus's sentences (as dumped by the scorer)
// and write the embedding sidecar file the scorer can load back.
//
//   embed-exporter --corpus docs/ --encoder hashing --dim 64 \
//       --buffer-size 1 --output side.jsonl
//   embed-exporter --dump sentences.tsv --output side.jsonl

import { exportEmbeddings, ExportRequest } from "./export.js";

const USAGE = `usage: embed-exporter [options]

  --corpus <path>       corpus for the scorer to segment (directory or .conllu)
  --dump <file>         pre-made sentence dump TSV (skips running the scorer)
  --output <file>       sidecar file to write (required)
  --encoder <id>        "hashing" (default) or "xenova:<model>"
  --dim <n>             hashing encoder width (default 64)
  --buffer-size <n>     sentence context window, must match the scoring run (default 1)
  --primary <cmd>       scorer command (default "scigispy")
  --batch-size <n>      encoder batch size (default 64)
`;

function parseArgs(argv: string[]): ExportRequest {
  const request: ExportRequest = {
    encoder: "hashing",
    dim: 64,
    bufferSize: 1,
    output: "",
    primaryCommand: "scigispy",
  };
  for (let i = 0; i < argv.length; i++) {
    const flag = argv[i];
    const next = () => {
      i++;
      if (i >= argv.length) throw new Error(`missing value for ${flag}`);
      return argv[i];
    };
    switch (flag) {
      case "--corpus":
        request.corpus = next();
        break;
      case "--dump":
        request.dumpFile = next();
        break;
      case "--output":
        request.output = next();
        break;
      case "--encoder":
        request.encoder = next();
        break;
      case "--dim":
        request.dim = Number(next());
        break;
      case "--buffer-size":
        request.bufferSize = Number(next());
        break;
      case "--primary":
        request.primaryCommand = next();
        break;
      case "--batch-size":
        request.batchSize = Number(next());
        break;
      case "--help":
      case "-h":
        process.stdout.write(USAGE);
        process.exit(0);
        break;
      default:
        throw new Error(`unknown option ${flag}\n${USAGE}`);
    }
  }
  if (!request.output) throw new Error(`--output is required\n${USAGE}`);
  if (!request.corpus && !request.dumpFile) {
    throw new Error(`one of --corpus or --dump is required\n${USAGE}`);
  }
  return request;
}

async function main() {
  try {
    const request = parseArgs(process.argv.slice(2));
    const count = await exportEmbeddings(request);
    process.stderr.write(`wrote ${count} records to ${request.output}\n`);
  } catch (err) {
    process.stderr.write(`embed-exporter: ${err instanceof Error ? err.message : err}\n`);
    process.exit(1);
  }
}

main();
