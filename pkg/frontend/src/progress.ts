/**
 * Client-side progress estimation for the synchronous simulate call:
 * remaining = elapsed * (total - done) / done, with the completed-row
 * count itself estimated from the row rate of the previous run.
 */

export function estimateRemaining(elapsed: number, done: number, total: number): number {
  if (done <= 0) {
    throw new Error("cannot extrapolate with zero completed rows");
  }
  if (elapsed < 0 || done > total) {
    throw new Error("elapsed must be >= 0 and done <= total");
  }
  return (elapsed * (total - done)) / done;
}

export class RowRateTracker {
  private rowsPerSecond: number | null = null;

  record(rows: number, seconds: number): void {
    if (rows > 0 && seconds > 0) {
      this.rowsPerSecond = rows / seconds;
    }
  }

  /** Progress text while a simulate request is in flight. */
  describe(elapsed: number, totalRows: number): string {
    if (this.rowsPerSecond === null || elapsed <= 0) {
      return `simulating... ${elapsed.toFixed(1)}s elapsed`;
    }
    const done = Math.min(Math.max(Math.floor(elapsed * this.rowsPerSecond), 1), totalRows - 1);
    const eta = estimateRemaining(elapsed, done, totalRows);
    return `row ${done}/${totalRows} eta ${eta.toFixed(1)}s`;
  }
}
