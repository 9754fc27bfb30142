import type { Mode, PlacementResponse } from "./types.js";

export interface PlacementQuery {
  x0: string;
  r: string;
  width: number;
  height: number;
  mode: Mode;
  count?: number;
}

/** Server-side rejection; `message` is the server's error text, verbatim. */
export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
    this.name = "ApiError";
  }
}

export function placementsUrl(baseUrl: string, query: PlacementQuery): string {
  const params = new URLSearchParams({
    x0: query.x0,
    r: query.r,
    width: String(query.width),
    height: String(query.height),
    mode: query.mode,
  });
  if (query.count !== undefined) {
    params.set("count", String(query.count));
  }
  return `${baseUrl.replace(/\/$/, "")}/api/placements?${params.toString()}`;
}

export async function fetchPlacements(
  baseUrl: string,
  query: PlacementQuery,
): Promise<PlacementResponse> {
  const response = await fetch(placementsUrl(baseUrl, query));
  if (!response.ok) {
    let message = `request failed with status ${response.status}`;
    try {
      const body = (await response.json()) as { error?: string };
      if (body.error) message = body.error;
    } catch {
      // non-JSON error body; keep the generic message
    }
    throw new ApiError(message, response.status);
  }
  return (await response.json()) as PlacementResponse;
}
