/**
 * DOM wiring for the Snake demo: seed panel, canvas rendering, keyboard,
 * and the fetch-at-start placement feed. All game rules live in game.ts.
 */

import { ApiError, fetchPlacements } from "./api.js";
import { createGame, tick, type GameState } from "./game.js";
import type { Direction, Mode, PlacementResponse } from "./types.js";

const TICKS_PER_SECOND = 8;
const CELL_PX = 24;

const KEY_DIRECTIONS: Record<string, Direction> = {
  ArrowUp: "up",
  ArrowDown: "down",
  ArrowLeft: "left",
  ArrowRight: "right",
  KeyW: "up",
  KeyS: "down",
  KeyA: "left",
  KeyD: "right",
};

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const canvas = $<HTMLCanvasElement>("board");
const ctx = canvas.getContext("2d")!;
const statusLine = $<HTMLElement>("status");
const scoreLine = $<HTMLElement>("score");
const errorBox = $<HTMLElement>("error");
const retryButton = $<HTMLButtonElement>("retry");
const startButton = $<HTMLButtonElement>("start");
const seedPanel = $<HTMLElement>("seed-panel");
const copyButton = $<HTMLButtonElement>("copy-share");

let state: GameState | null = null;
let pendingInput: Direction | null = null;
let timer: number | undefined;
let shareString = "";

function readConfig() {
  return {
    baseUrl: $<HTMLInputElement>("base-url").value.trim() || window.location.origin,
    x0: $<HTMLInputElement>("x0").value.trim(),
    r: $<HTMLInputElement>("r").value.trim(),
    width: Number($<HTMLInputElement>("width").value),
    height: Number($<HTMLInputElement>("height").value),
    mode: $<HTMLSelectElement>("mode").value as Mode,
  };
}

function showError(message: string) {
  errorBox.hidden = false;
  $<HTMLElement>("error-message").textContent = message;
}

function clearError() {
  errorBox.hidden = true;
}

function showSeedPanel(feed: PlacementResponse) {
  // the echoed seed is the one actually used (perturbed in casual mode),
  // so the share string replays this exact layout
  shareString = `x0=${feed.seed.x0}&r=${feed.seed.r}&width=${feed.grid.width}&height=${feed.grid.height}&mode=competition`;
  $<HTMLElement>("seed-x0").textContent = feed.seed.x0;
  $<HTMLElement>("seed-r").textContent = feed.seed.r;
  $<HTMLElement>("seed-mode").textContent = feed.mode;
  seedPanel.hidden = false;
}

function render() {
  if (!state) return;
  const { width, height } = state.grid;
  canvas.width = width * CELL_PX;
  canvas.height = height * CELL_PX;
  ctx.fillStyle = "#182818";
  ctx.fillRect(0, 0, canvas.width, canvas.height);

  if (state.food) {
    ctx.fillStyle = "#d33";
    const [fx, fy] = state.food;
    ctx.fillRect(fx * CELL_PX + 2, fy * CELL_PX + 2, CELL_PX - 4, CELL_PX - 4);
  }
  state.snake.forEach(([x, y], i) => {
    ctx.fillStyle = i === 0 ? "#9f9" : "#4b4";
    ctx.fillRect(x * CELL_PX + 1, y * CELL_PX + 1, CELL_PX - 2, CELL_PX - 2);
  });

  scoreLine.textContent = `score ${state.score}`;
  statusLine.textContent =
    state.status === "running"
      ? "playing"
      : state.status === "won"
        ? "you won: placement feed exhausted"
        : "game over";
}

function step() {
  if (!state || state.status !== "running") return;
  state = tick(state, pendingInput);
  pendingInput = null;
  render();
  if (state.status !== "running" && timer !== undefined) {
    window.clearInterval(timer);
    timer = undefined;
  }
}

async function start() {
  clearError();
  const config = readConfig();
  startButton.disabled = true;
  try {
    const feed = await fetchPlacements(config.baseUrl, {
      x0: config.x0,
      r: config.r,
      width: config.width,
      height: config.height,
      mode: config.mode,
    });
    showSeedPanel(feed);
    state = createGame(feed);
    pendingInput = null;
    render();
    if (timer !== undefined) window.clearInterval(timer);
    timer = window.setInterval(step, 1000 / TICKS_PER_SECOND);
  } catch (err) {
    if (err instanceof ApiError) {
      showError(err.message); // server validation text, verbatim
    } else {
      showError(`could not reach the placement service: ${String(err)}`);
    }
  } finally {
    startButton.disabled = false;
  }
}

document.addEventListener("keydown", (event) => {
  const direction = KEY_DIRECTIONS[event.code];
  if (direction) {
    pendingInput = direction;
    event.preventDefault();
  }
});

startButton.addEventListener("click", () => void start());
retryButton.addEventListener("click", () => void start());
copyButton.addEventListener("click", () => {
  void navigator.clipboard.writeText(shareString);
});
