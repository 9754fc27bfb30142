/**
 * Pure Snake core. Food cells come from a placement feed (a fixed
 * permutation of the grid), consumed strictly in order; placements under
 * the snake are skipped permanently. Given the same feed and the same
 * input script the whole game, including the food log, replays exactly.
 */

import type { Cell, Direction, GridSize, PlacementResponse } from "./types.js";

export type Status = "running" | "game_over" | "won";

export interface GameState {
  grid: GridSize;
  /** Occupied cells, head first. */
  snake: Cell[];
  direction: Direction;
  placements: readonly Cell[];
  /** Index of the next placement to consider; only ever increases. */
  cursor: number;
  food: Cell | null;
  score: number;
  /** Every cell ever shown as food, in order served. */
  foodLog: Cell[];
  status: Status;
}

const OPPOSITE: Record<Direction, Direction> = {
  up: "down",
  down: "up",
  left: "right",
  right: "left",
};

const STEP: Record<Direction, Cell> = {
  up: [0, -1],
  down: [0, 1],
  left: [-1, 0],
  right: [1, 0],
};

export function sameCell(a: Cell, b: Cell): boolean {
  return a[0] === b[0] && a[1] === b[1];
}

function onSnake(snake: readonly Cell[], cell: Cell): boolean {
  return snake.some((c) => sameCell(c, cell));
}

/**
 * Serve the next placement not occupied by the snake. Exhausting the feed
 * (skips included) wins the game.
 */
export function advanceFood(state: GameState): GameState {
  let cursor = state.cursor;
  while (cursor < state.placements.length && onSnake(state.snake, state.placements[cursor]!)) {
    cursor += 1;
  }
  if (cursor >= state.placements.length) {
    return { ...state, cursor, food: null, status: "won" };
  }
  const food = state.placements[cursor]!;
  return {
    ...state,
    cursor: cursor + 1,
    food,
    foodLog: [...state.foodLog, food],
  };
}

/** New game: snake length 3 at the grid center, heading right. */
export function createGame(feed: PlacementResponse): GameState {
  const { width, height } = feed.grid;
  const cx = Math.floor(width / 2);
  const cy = Math.floor(height / 2);
  if (cx - 2 < 0) {
    throw new Error(`grid too narrow for the demo snake: width ${width} < 4`);
  }
  const snake: Cell[] = [
    [cx, cy],
    [cx - 1, cy],
    [cx - 2, cy],
  ];
  const state: GameState = {
    grid: feed.grid,
    snake,
    direction: "right",
    placements: feed.coords.map(([x, y]) => [x, y] as Cell),
    cursor: 0,
    food: null,
    score: 0,
    foodLog: [],
    status: "running",
  };
  return advanceFood(state);
}

/**
 * One simulation step. `input` is the direction pressed since the last
 * tick, if any; an input that would reverse the snake is ignored.
 */
export function tick(state: GameState, input?: Direction | null): GameState {
  if (state.status !== "running") {
    return state;
  }
  const direction =
    input && input !== OPPOSITE[state.direction] ? input : state.direction;
  const head = state.snake[0]!;
  const [dx, dy] = STEP[direction];
  const next: Cell = [head[0] + dx, head[1] + dy];

  if (next[0] < 0 || next[0] >= state.grid.width || next[1] < 0 || next[1] >= state.grid.height) {
    return { ...state, direction, status: "game_over" };
  }

  const eating = state.food !== null && sameCell(next, state.food);
  // the tail cell is vacated this tick unless the snake grows into it
  const blocking = eating ? state.snake : state.snake.slice(0, -1);
  if (onSnake(blocking, next)) {
    return { ...state, direction, status: "game_over" };
  }

  const snake = eating ? [next, ...state.snake] : [next, ...state.snake.slice(0, -1)];
  let moved: GameState = { ...state, direction, snake };
  if (eating) {
    moved = advanceFood({ ...moved, score: moved.score + 1, food: null });
  }
  return moved;
}
