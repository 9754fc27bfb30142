export type Mode = "competition" | "casual";
export type Direction = "up" | "down" | "left" | "right";

/** Grid cell as [x, y], origin top-left. */
export type Cell = readonly [number, number];

export interface SeedStrings {
  x0: string;
  r: string;
}

export interface GridSize {
  width: number;
  height: number;
}

/** Body of GET /api/placements: a permutation of all grid cells. */
export interface PlacementResponse {
  seed: SeedStrings;
  grid: GridSize;
  mode: Mode;
  coords: [number, number][];
}
