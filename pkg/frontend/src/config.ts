// The single configuration knob: where the assistant service lives.
// Override at serve time with <script>window.ASSISTANT_URL = "..."</script>
// before the app module loads; the sim URL (dev fault panel only) rides
// along the same way.

declare global {
  interface Window {
    ASSISTANT_URL?: string;
    SIM_URL?: string;
  }
}

const DEFAULT_ASSISTANT_URL = "http://127.0.0.1:8100";

export function assistantUrl(): string {
  const configured =
    typeof window !== "undefined" ? window.ASSISTANT_URL : undefined;
  return stripTrailingSlash(configured || DEFAULT_ASSISTANT_URL);
}

export function simUrl(): string | null {
  const configured = typeof window !== "undefined" ? window.SIM_URL : undefined;
  return configured ? stripTrailingSlash(configured) : null;
}

export function stripTrailingSlash(url: string): string {
  return url.endsWith("/") ? url.slice(0, -1) : url;
}
