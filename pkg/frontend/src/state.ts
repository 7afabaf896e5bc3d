import type { PresetSelection, ScoreRecord } from "./types.js";

/**
 * Meter view state with pure transitions.
 *
 * Responses are matched to request sequence numbers: only the response to
 * the most recently issued request may render, so a stale reply (slow
 * response to an older keystroke or preset) is always discarded. The
 * verdict history keeps bits and verdicts only — raw passwords never
 * enter state beyond the live input field.
 */

export interface VerdictHistoryEntry {
  bits: number;
  hypothesis: "H0" | "H1";
  ttcDisplay: string;
}

export interface MeterViewState {
  input: string;
  record: ScoreRecord | null;
  inFlight: boolean;
  offline: boolean;
  lastIssuedSeq: number;
  presets: PresetSelection;
  history: VerdictHistoryEntry[];
}

export const HISTORY_LIMIT = 20;

export function initialState(presets: PresetSelection = {}): MeterViewState {
  return {
    input: "",
    record: null,
    inFlight: false,
    offline: false,
    lastIssuedSeq: 0,
    presets,
    history: [],
  };
}

export function inputChanged(state: MeterViewState, input: string): MeterViewState {
  if (input === "") {
    // cleared field: drop the rendered record immediately, send nothing
    return { ...state, input, record: null, inFlight: false };
  }
  return { ...state, input };
}

export function presetChanged(
  state: MeterViewState,
  presets: PresetSelection,
): MeterViewState {
  return { ...state, presets: { ...state.presets, ...presets } };
}

/** Issue the next request: returns the state and the sequence number to tag it with. */
export function requestIssued(state: MeterViewState): [MeterViewState, number] {
  const seq = state.lastIssuedSeq + 1;
  return [{ ...state, lastIssuedSeq: seq, inFlight: true }, seq];
}

export function responseArrived(
  state: MeterViewState,
  seq: number,
  record: ScoreRecord,
): MeterViewState {
  if (seq !== state.lastIssuedSeq) {
    return state; // stale: a newer request has been issued since
  }
  if (state.input === "") {
    return state; // field was cleared while the request was in flight
  }
  const entry: VerdictHistoryEntry = {
    bits: record.eta_chain_bits,
    hypothesis: record.hypothesis,
    ttcDisplay: record.estimated_ttc_display,
  };
  return {
    ...state,
    record,
    inFlight: false,
    offline: false,
    history: [...state.history, entry].slice(-HISTORY_LIMIT),
  };
}

export function requestFailed(state: MeterViewState, seq: number): MeterViewState {
  if (seq !== state.lastIssuedSeq) {
    return state;
  }
  // unreachable service: show the banner, never a stale verdict
  return { ...state, record: null, inFlight: false, offline: true };
}
