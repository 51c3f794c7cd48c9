import { fetchCompare, fetchFamilies } from './api.js';
import { attachHover, attachWheelZoom } from './interact.js';
import { renderDotplots, renderLegend, renderPanel, SVG_NS } from './render.js';
import { createTooltip } from './tooltip.js';
import type { CompareResponse, FamilySummary } from './types.js';

const PANEL_HALF = 260;
const CANVAS_W = 1200;
const CANVAS_H = 860;
const STRIP_H = 220;

export interface AppDeps {
  fetchFamilies(): Promise<FamilySummary[]>;
  fetchCompare(left: string, right: string): Promise<CompareResponse>;
}

export interface App {
  init(): Promise<void>;
  selectFamilies(left: string, right: string): Promise<void>;
  state: {
    left: string | null;
    right: string | null;
    families: FamilySummary[];
  };
}

function option(value: string, text: string): HTMLOptionElement {
  const el = document.createElement('option');
  el.value = value;
  el.textContent = text;
  return el;
}

/**
 * Build the whole UI under `root` and return a handle for driving it.
 *
 * Responses that arrive after a newer selection has been made are discarded,
 * so the view always reflects the most recent pair of choices.
 */
export function createApp(
  root: HTMLElement,
  deps: AppDeps = { fetchFamilies, fetchCompare },
): App {
  root.replaceChildren();

  const controls = document.createElement('div');
  controls.className = 'controls';
  const leftSelect = document.createElement('select');
  leftSelect.id = 'left-family';
  const rightSelect = document.createElement('select');
  rightSelect.id = 'right-family';
  controls.append('Left family:', leftSelect, 'Right family:', rightSelect);

  const banner = document.createElement('div');
  banner.id = 'error-banner';
  banner.className = 'banner';
  banner.hidden = true;

  const svg = document.createElementNS(SVG_NS, 'svg');
  svg.setAttribute('viewBox', `0 0 ${CANVAS_W} ${CANVAS_H + STRIP_H}`);
  svg.setAttribute('width', String(CANVAS_W));
  svg.setAttribute('height', String(CANVAS_H + STRIP_H));
  svg.id = 'compare-svg';

  const leftPanel = document.createElementNS(SVG_NS, 'g');
  leftPanel.id = 'panel-left';
  leftPanel.setAttribute('transform', `translate(${CANVAS_W / 4} ${CANVAS_H / 2 - 80})`);
  const rightPanel = document.createElementNS(SVG_NS, 'g');
  rightPanel.id = 'panel-right';
  rightPanel.setAttribute('transform', `translate(${(3 * CANVAS_W) / 4} ${CANVAS_H / 2 - 80})`);
  const strip = document.createElementNS(SVG_NS, 'g');
  strip.id = 'dot-strip';
  strip.setAttribute('transform', `translate(60 ${CANVAS_H})`);
  svg.append(leftPanel, rightPanel, strip);

  const legend = document.createElement('div');
  legend.id = 'legend';

  root.append(controls, banner, svg, legend);

  const tooltip = createTooltip(root);
  attachHover(svg, tooltip);
  attachWheelZoom(leftPanel);
  attachWheelZoom(rightPanel);

  const state: App['state'] = { left: null, right: null, families: [] };
  let requestSeq = 0;

  const showError = (message: string): void => {
    banner.textContent = message;
    banner.hidden = false;
  };

  const applyCompare = (body: CompareResponse): void => {
    banner.hidden = true;
    renderPanel(leftPanel, body.left, body.palette, PANEL_HALF);
    renderPanel(rightPanel, body.right, body.palette, PANEL_HALF);
    renderDotplots(strip, body.dotplots, body.palette, CANVAS_W - 120, STRIP_H);
    renderLegend(legend, body.palette, body.dotplots);
  };

  const selectFamilies = async (left: string, right: string): Promise<void> => {
    state.left = left;
    state.right = right;
    const token = ++requestSeq;
    let body: CompareResponse;
    try {
      body = await deps.fetchCompare(left, right);
    } catch (err) {
      if (token === requestSeq) showError(err instanceof Error ? err.message : String(err));
      return;
    }
    if (token !== requestSeq) return; // a newer selection superseded this one
    applyCompare(body);
  };

  const onChange = (): void => {
    if (leftSelect.value && rightSelect.value) {
      void selectFamilies(leftSelect.value, rightSelect.value);
    }
  };
  leftSelect.addEventListener('change', onChange);
  rightSelect.addEventListener('change', onChange);

  const init = async (): Promise<void> => {
    let families: FamilySummary[];
    try {
      families = await deps.fetchFamilies();
    } catch (err) {
      showError(err instanceof Error ? err.message : String(err));
      return;
    }
    state.families = families;
    for (const fam of families) {
      const text = `${fam.family_id} (${fam.person_count} people)`;
      leftSelect.appendChild(option(fam.family_id, text));
      rightSelect.appendChild(option(fam.family_id, text));
    }
    if (families.length >= 2) {
      leftSelect.value = families[0].family_id;
      rightSelect.value = families[1].family_id;
      await selectFamilies(leftSelect.value, rightSelect.value);
    }
  };

  return { init, selectFamilies, state };
}
