/**
 * Trailing-edge debouncer: an action runs only after the input has been
 * quiet for the window (150 ms by default). Rescheduling cancels the
 * pending run, so rapid typing yields exactly one request per settle.
 */
export class Debouncer {
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(readonly windowMs: number = 150) {}

  schedule(action: () => void): void {
    this.cancel();
    this.timer = setTimeout(() => {
      this.timer = null;
      action();
    }, this.windowMs);
  }

  cancel(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }

  get pending(): boolean {
    return this.timer !== null;
  }
}
