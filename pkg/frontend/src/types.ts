/** Wire types mirroring the scoring service's record schemas. */

export interface SegmentCost {
  segment: string;
  rule: string; // pricing rule id, or "fallback"
  cost_bits: number;
}

export interface ScoreRecord {
  record_version: number;
  eta_upper_bits: number;
  eta_lower_rule_bits: number;
  eta_chain_bits: number;
  eta_order_aware_bits: number | null;
  eta_final_bits: number;
  normalized: number;
  minimizing_parsing: string | null;
  per_segment_costs: SegmentCost[];
  truncated: boolean;
  capped: boolean;
  hypothesis: "H0" | "H1";
  fat_strong: boolean;
  estimated_ttc_seconds: number | null; // null = unbounded
  estimated_ttc_display: string;
  threshold_seconds: number;
  evaluation_year: number;
  eta_used_bits: number;
  adversary: string;
  protection: string;
}

export interface PresetInfo {
  id: string;
  baseline_year?: number;
  baseline_guess_rate?: number;
  cost_model_seconds_per_guess?: number;
  description?: string;
}

export interface ConfigInfo {
  alphabet: { name: string; size: number };
  rules: { id: string; kind: string; cardinality_bits: number }[];
  adversaries: PresetInfo[];
  protections: PresetInfo[];
  defaults: {
    adversary: string;
    protection: string;
    t_seconds: number;
    year: number;
  };
}

export interface PresetSelection {
  adversary?: string;
  protection?: string;
  tSeconds?: number;
}
