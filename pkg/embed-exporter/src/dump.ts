// Parser for the scorer's sentence dump: a TSV with header
// "doc_id<TAB>sent<TAB>text", one row per (document, sentence index),
// where the text column already carries the configured context window.

export interface DumpRow {
  docId: string;
  sent: number;
  text: string;
}

export function parseSentenceDump(content: string): DumpRow[] {
  const lines = content.split("\n").filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new Error("sentence dump is empty");
  }
  const header = lines[0].split("\t");
  if (header[0] !== "doc_id" || header[1] !== "sent" || header[2] !== "text") {
    throw new Error(`unexpected sentence dump header: ${lines[0]}`);
  }
  const rows: DumpRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split("\t");
    if (parts.length !== 3) {
      throw new Error(`sentence dump line ${i + 1}: expected 3 columns, got ${parts.length}`);
    }
    const sent = Number(parts[1]);
    if (!Number.isInteger(sent) || sent < 0) {
      throw new Error(`sentence dump line ${i + 1}: bad sentence index ${parts[1]}`);
    }
    rows.push({ docId: parts[0], sent, text: parts[2] });
  }
  return rows;
}
