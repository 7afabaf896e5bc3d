import { MeterApi } from "./api.js";
import { Debouncer } from "./debounce.js";
import {
  initialState,
  inputChanged,
  presetChanged,
  requestFailed,
  requestIssued,
  responseArrived,
  type MeterViewState,
} from "./state.js";
import { toViewModel } from "./render.js";
import type { ConfigInfo } from "./types.js";

/** Browser wiring: binds the meter logic to the page. */

const SERVICE_URL =
  new URLSearchParams(window.location.search).get("service") ?? "http://127.0.0.1:8750";

const api = new MeterApi(SERVICE_URL);
const debouncer = new Debouncer(150);
let state: MeterViewState = initialState();

const el = (id: string) => document.getElementById(id)!;

function render(): void {
  const offlineBanner = el("offline");
  offlineBanner.hidden = !state.offline;
  const panel = el("result");
  if (state.record === null) {
    panel.hidden = true;
    return;
  }
  const vm = toViewModel(state.record);
  panel.hidden = false;
  el("bits").textContent = vm.bitsText;
  (el("bar") as HTMLElement).style.width = `${(vm.barFraction * 100).toFixed(1)}%`;
  el("parsing").textContent = vm.parsingText;
  el("segments").innerHTML = vm.segments
    .map(
      (s) =>
        `<tr><td><code>${escapeHtml(s.segment)}</code></td>` +
        `<td>${escapeHtml(s.rule)}</td><td>${s.costBits} bits</td></tr>`,
    )
    .join("");
  const badge = el("verdict");
  badge.textContent = vm.verdictLabel;
  badge.className = `badge ${vm.verdictTone}`;
  el("ttc").textContent = vm.ttcText;
  el("warnings").textContent = vm.warnings.join(" · ");
}

function escapeHtml(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function sendScore(): void {
  const password = state.input;
  if (password === "") {
    return;
  }
  let seq: number;
  [state, seq] = requestIssued(state);
  api
    .score(password, state.presets)
    .then((record) => {
      state = responseArrived(state, seq, record);
      render();
    })
    .catch(() => {
      state = requestFailed(state, seq);
      render();
    });
}

function onInput(value: string): void {
  state = inputChanged(state, value);
  if (value === "") {
    debouncer.cancel();
    render();
    return;
  }
  debouncer.schedule(sendScore);
}

function populatePresets(config: ConfigInfo): void {
  const adversary = el("adversary") as HTMLSelectElement;
  const protection = el("protection") as HTMLSelectElement;
  for (const a of config.adversaries) {
    adversary.add(new Option(a.id, a.id, undefined, a.id === config.defaults.adversary));
  }
  for (const p of config.protections) {
    protection.add(new Option(p.id, p.id, undefined, p.id === config.defaults.protection));
  }
  (el("t-seconds") as HTMLInputElement).value = String(config.defaults.t_seconds);
}

export function start(): void {
  const input = el("password") as HTMLInputElement;
  input.addEventListener("input", () => onInput(input.value));
  for (const id of ["adversary", "protection", "t-seconds"] as const) {
    el(id).addEventListener("change", () => {
      const tRaw = (el("t-seconds") as HTMLInputElement).value;
      state = presetChanged(state, {
        adversary: (el("adversary") as HTMLSelectElement).value,
        protection: (el("protection") as HTMLSelectElement).value,
        tSeconds: tRaw ? Number(tRaw) : undefined,
      });
      // re-score the current input under the new preset, bypassing debounce
      if (state.input !== "") {
        sendScore();
      }
    });
  }
  api
    .fetchConfig()
    .then((config) => populatePresets(config))
    .catch(() => {
      state = { ...state, offline: true };
      render();
    });
}

start();
