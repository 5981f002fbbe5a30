// Sentence encoders. The built-in "hashing" encoder is fully deterministic
// and dependency-free: each word is hashed into a signed bucket (FNV-1a),
// the buckets are summed and the vector is L2-normalized. Transformer
// encoders are resolved lazily via @xenova/transformers when an id of the
// form "xenova:<model>" is given; a missing package or model surfaces as an
// encoder load failure.

export interface Encoder {
  id: string;
  pooling: string;
  dim: number;
  encode(texts: string[]): Promise<number[][]>;
}

export function fnv1a(text: string): number {
  const bytes = new TextEncoder().encode(text);
  let hash = 0x811c9dc5;
  for (const byte of bytes) {
    hash ^= byte;
    hash = Math.imul(hash, 0x01000193) >>> 0;
  }
  return hash >>> 0;
}

export function hashEmbed(text: string, dim: number): number[] {
  const vector = new Array<number>(dim).fill(0);
  const words = text.toLowerCase().match(/[a-z0-9]+(?:['-][a-z0-9]+)*/g) ?? [];
  for (const word of words) {
    const hash = fnv1a(word);
    const bucket = hash % dim;
    const sign = ((hash >>> 16) & 1) === 0 ? 1 : -1;
    vector[bucket] += sign;
  }
  const norm = Math.sqrt(vector.reduce((acc, x) => acc + x * x, 0));
  if (norm === 0) return vector;
  return vector.map((x) => x / norm);
}

export class HashingEncoder implements Encoder {
  id = "hashing";
  pooling = "signed-bag-of-words";
  dim: number;

  constructor(dim: number) {
    if (!Number.isInteger(dim) || dim <= 0) {
      throw new Error(`hashing encoder dimension must be a positive integer, got ${dim}`);
    }
    this.dim = dim;
  }

  async encode(texts: string[]): Promise<number[][]> {
    return texts.map((text) => hashEmbed(text, this.dim));
  }
}

class XenovaEncoder implements Encoder {
  id: string;
  pooling = "mean";
  dim = 0; // known after the first batch
  private model: string;
  private pipe: ((texts: string[], opts: object) => Promise<{ tolist(): number[][] }>) | null = null;

  constructor(model: string) {
    this.id = `xenova:${model}`;
    this.model = model;
  }

  private async load() {
    if (this.pipe) return this.pipe;
    let transformers;
    // non-literal specifier: the package is optional and resolved at runtime
    const specifier = "@xenova/transformers";
    try {
      transformers = await import(specifier);
    } catch (err) {
      throw new Error(
        `encoder load failure: @xenova/transformers is not installed (needed for ${this.id}): ${err}`
      );
    }
    try {
      this.pipe = await transformers.pipeline("feature-extraction", this.model);
    } catch (err) {
      throw new Error(`encoder load failure: could not load model ${this.model}: ${err}`);
    }
    return this.pipe!;
  }

  async encode(texts: string[]): Promise<number[][]> {
    const pipe = await this.load();
    const output = await pipe(texts, { pooling: "mean", normalize: true });
    const vectors = output.tolist();
    if (this.dim === 0 && vectors.length > 0) this.dim = vectors[0].length;
    return vectors;
  }
}

export function resolveEncoder(id: string, dim: number): Encoder {
  if (id === "hashing") return new HashingEncoder(dim);
  if (id.startsWith("xenova:")) return new XenovaEncoder(id.slice("xenova:".length));
  throw new Error(`unknown encoder ${id} (use "hashing" or "xenova:<model>")`);
}
