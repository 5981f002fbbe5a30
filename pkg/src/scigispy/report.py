"""Report serialization: TSV (with a trailing '#' summary block where one
applies) and an equivalent JSON document.  Numbers are written with
shortest round-trip precision so that TSV and JSON runs carry identical
values and identical inputs produce byte-identical output."""

from __future__ import annotations

import json

from .indices import INDEX_NAMES


def fmt(x) -> str:
    return repr(float(x))


def _ordered_names(enabled):
    return [n for n in INDEX_NAMES if n in enabled]


def write_score_tsv(fh, scores, enabled):
    names = _ordered_names(enabled)
    header = ["doc_id"] + [f"raw_{n}" for n in names] + [f"z_{n}" for n in names] + ["gis"]
    fh.write("\t".join(header) + "\n")
    for s in scores:
        row = [s.doc_id]
        row += [fmt(s.raw[n]) if s.available[n] else "NA" for n in names]
        row += [fmt(s.z[n]) for n in names]
        row.append(fmt(s.gis))
        fh.write("\t".join(row) + "\n")


def write_score_json(fh, scores, enabled, zstats):
    names = _ordered_names(enabled)
    documents = []
    for s in scores:
        documents.append(
            {
                "doc_id": s.doc_id,
                "raw": {n: (s.raw[n] if s.available[n] else None) for n in names},
                "z": {n: s.z[n] for n in names},
                "gis": s.gis,
            }
        )
    stats = {
        n: {
            "mean": zstats[n].mean,
            "std": zstats[n].std,
            "available_count": zstats[n].available_count,
            "degenerate": zstats[n].degenerate,
        }
        for n in names
    }
    json.dump({"documents": documents, "stats": stats}, fh, indent=2)
    fh.write("\n")


def write_pairs_tsv(fh, outcomes, report):
    fh.write("pair_id\tgis_abs\tgis_pls\tdiff\n")
    for o in outcomes:
        fh.write(f"{o.pair_id}\t{fmt(o.gis_abs)}\t{fmt(o.gis_pls)}\t{fmt(o.diff)}\n")
    fh.write(f"# n\t{report.n}\n")
    fh.write(f"# mean_diff\t{fmt(report.mean_diff)}\n")
    fh.write(f"# pct_positive\t{fmt(report.pct_positive)}\n")
    fh.write(f"# pct_increased\t{'NA' if report.pct_increased is None else fmt(report.pct_increased)}\n")
    fh.write(f"# pct_neg_to_pos\t{'NA' if report.pct_neg_to_pos is None else fmt(report.pct_neg_to_pos)}\n")


def write_pairs_json(fh, outcomes, report):
    obj = {
        "pairs": [
            {"pair_id": o.pair_id, "gis_abs": o.gis_abs, "gis_pls": o.gis_pls, "diff": o.diff}
            for o in outcomes
        ],
        "summary": {
            "n": report.n,
            "mean_diff": report.mean_diff,
            "pct_positive": report.pct_positive,
            "pct_increased": report.pct_increased,
            "pct_neg_to_pos": report.pct_neg_to_pos,
        },
    }
    json.dump(obj, fh, indent=2)
    fh.write("\n")


def write_ttest_tsv(fh, report, n1, n2):
    fh.write("metric\tvalue\n")
    fh.write(f"distance\t{fmt(report.distance)}\n")
    fh.write(f"t\t{fmt(report.t)}\n")
    fh.write(f"p\t{fmt(report.p)}\n")
    fh.write(f"df\t{fmt(report.df)}\n")
    fh.write(f"n1\t{n1}\n")
    fh.write(f"n2\t{n2}\n")


def write_ttest_json(fh, report, n1, n2):
    obj = {
        "distance": report.distance,
        "t": report.t,
        "p": report.p,
        "df": report.df,
        "n1": n1,
        "n2": n2,
    }
    json.dump(obj, fh, indent=2)
    fh.write("\n")


def write_correlation_tsv(fh, report):
    fh.write("metric\tvalue\n")
    fh.write(f"r_gis_fkgl\t{fmt(report.r_gis_fkgl)}\n")
    fh.write(f"r_gis_ari\t{fmt(report.r_gis_ari)}\n")
    fh.write(f"n\t{report.n}\n")


def write_correlation_json(fh, report):
    obj = {"r_gis_fkgl": report.r_gis_fkgl, "r_gis_ari": report.r_gis_ari, "n": report.n}
    json.dump(obj, fh, indent=2)
    fh.write("\n")


def write_sentence_dump(fh, docs, buffer_size):
    """TSV of (doc_id, sentence index, windowed sentence text), the exact
    sentence list an embedding exporter must cover.  Tabs and newlines
    inside text are normalized to single spaces."""
    fh.write("doc_id\tsent\ttext\n")
    for doc in docs:
        n = len(doc.sentences)
        for i in range(n):
            lo = max(0, i - buffer_size)
            hi = min(n - 1, i + buffer_size)
            text = " ".join(s.raw for s in doc.sentences[lo : hi + 1])
            text = " ".join(text.split())
            fh.write(f"{doc.doc_id}\t{i}\t{text}\n")
