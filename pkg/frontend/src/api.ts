import type { ConfigInfo, PresetSelection, ScoreRecord } from "./types.js";

/**
 * Thin client for the scoring service. Passwords travel only in POST
 * bodies — never in URLs — so they cannot leak into request logs or
 * browser history.
 */
export class MeterApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  async fetchConfig(): Promise<ConfigInfo> {
    const response = await this.fetchFn(`${this.baseUrl}/v1/config`);
    if (!response.ok) {
      throw new Error(`config fetch failed: ${response.status}`);
    }
    return (await response.json()) as ConfigInfo;
  }

  async score(password: string, presets: PresetSelection = {}): Promise<ScoreRecord> {
    const body: Record<string, unknown> = { password };
    if (presets.adversary !== undefined) body.adversary = presets.adversary;
    if (presets.protection !== undefined) body.protection = presets.protection;
    if (presets.tSeconds !== undefined) body.t_seconds = presets.tSeconds;
    const response = await this.fetchFn(`${this.baseUrl}/v1/score`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      throw new Error(`score failed: ${response.status}`);
    }
    return (await response.json()) as ScoreRecord;
  }
}
