import type { ScoreRecord } from "./types.js";

/**
 * Pure view-model formatting. Bits come verbatim from the record's
 * eta_chain_bits field — the client never recomputes scores.
 */

export interface SegmentRow {
  segment: string;
  rule: string;
  costBits: string;
}

export interface MeterViewModel {
  bitsText: string;
  barFraction: number;
  parsingText: string;
  segments: SegmentRow[];
  verdictLabel: string;
  verdictTone: "strong" | "weak";
  ttcText: string;
  warnings: string[];
}

export function formatBits(record: ScoreRecord): string {
  return `${record.eta_chain_bits.toFixed(2)} bits`;
}

export function toViewModel(record: ScoreRecord): MeterViewModel {
  const warnings: string[] = [];
  if (record.truncated) {
    warnings.push("parsing enumeration truncated: shown complexity is an upper bound");
  }
  if (record.capped) {
    warnings.push("complexity capped at the brute-force upper bound");
  }
  const strong = record.hypothesis === "H1";
  return {
    bitsText: formatBits(record),
    barFraction: Math.min(Math.max(record.normalized, 0), 1),
    parsingText: record.minimizing_parsing ?? "(no parsing: whole-space brute force)",
    segments: record.per_segment_costs.map((sc) => ({
      segment: sc.segment,
      rule: sc.rule,
      costBits: sc.cost_bits.toFixed(2),
    })),
    verdictLabel: strong ? "strong (H1)" : "not strong (H0)",
    verdictTone: strong ? "strong" : "weak",
    ttcText: `time to crack: ${record.estimated_ttc_display}`,
    warnings,
  };
}
