import { createGame, tick, type GameState } from "./game.js";
import type { Direction, PlacementResponse } from "./types.js";

/** One entry per tick: the direction pressed during that tick, or null. */
export type InputScript = (Direction | null)[];

/** Run a recorded keystroke script against a placement feed. */
export function runScript(feed: PlacementResponse, script: InputScript): GameState {
  let state = createGame(feed);
  for (const input of script) {
    if (state.status !== "running") {
      break;
    }
    state = tick(state, input);
  }
  return state;
}
