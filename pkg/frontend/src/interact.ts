import type { Tooltip } from './tooltip.js';
import { formatDotTooltip } from './tooltip.js';

export const HOVER_SCALE = 2.5;

interface Enlarged {
  chart: SVGGElement;
  transform: string | null;
  parent: Node;
  nextSibling: Node | null;
}

export interface HoverState {
  /** person id of the glyph currently hovered, if any */
  hoverTarget: string | null;
}

/**
 * Wire hover behavior onto a rendered compare view.
 *
 * Glyphs that carry a radial chart grow it by HOVER_SCALE and raise it above
 * siblings; leaving restores the subtree exactly (same transform attribute,
 * same position among siblings). Glyphs without a chart, and dot-plot dots,
 * show a tooltip instead.
 */
export function attachHover(root: SVGSVGElement, tooltip: Tooltip): HoverState {
  const state: HoverState = { hoverTarget: null };
  let enlarged: Enlarged | null = null;

  const restore = (): void => {
    if (!enlarged) return;
    if (enlarged.transform === null) enlarged.chart.removeAttribute('transform');
    else enlarged.chart.setAttribute('transform', enlarged.transform);
    enlarged.parent.insertBefore(enlarged.chart, enlarged.nextSibling);
    enlarged = null;
  };

  const enlarge = (chart: SVGGElement): void => {
    if (enlarged?.chart === chart) return;
    restore();
    const transform = chart.getAttribute('transform');
    enlarged = {
      chart,
      transform,
      parent: chart.parentNode as Node,
      nextSibling: chart.nextSibling,
    };
    chart.setAttribute('transform', `${transform ?? ''} scale(${HOVER_SCALE})`.trimStart());
    // hoist to the end of the panel so the grown chart paints above everything;
    // all ancestor groups between panel and chart carry no transforms, so the
    // chart's own translate keeps it in place
    const panel = chart.closest<SVGGElement>('g[data-family]');
    (panel ?? (enlarged.parent as SVGGElement)).appendChild(chart);
  };

  root.addEventListener('mouseover', (event) => {
    const target = event.target as Element | null;
    if (!target || typeof target.closest !== 'function') return;

    const dot = target.closest<SVGCircleElement>('.dot');
    if (dot) {
      state.hoverTarget = dot.getAttribute('data-person');
      tooltip.show(
        event.clientX,
        event.clientY,
        formatDotTooltip(
          dot.getAttribute('data-person') ?? '',
          dot.getAttribute('data-family') ?? '',
          dot.getAttribute('data-age'),
        ),
      );
      return;
    }

    const person = target.closest<SVGGElement>('.person');
    if (!person) return;
    state.hoverTarget = person.getAttribute('data-person');
    if (enlarged && enlarged.parent === person) return; // already grown for this glyph
    const chart = person.querySelector<SVGGElement>('.radial-chart');
    if (chart) {
      enlarge(chart);
      return;
    }
    const glyph = person.querySelector<SVGElement>('.glyph');
    tooltip.show(
      event.clientX,
      event.clientY,
      formatDotTooltip(
        person.getAttribute('data-person') ?? '',
        glyph?.getAttribute('data-family') ?? '',
        null,
      ),
    );
  });

  root.addEventListener('mouseout', (event) => {
    const target = event.target as Element | null;
    if (!target || typeof target.closest !== 'function') return;
    if (target.closest('.dot') || target.closest('.person') || target.closest('.radial-chart')) {
      state.hoverTarget = null;
      tooltip.hide();
      restore();
    }
  });

  return state;
}

/** Minimal per-panel zoom: wheel scales the panel group about its origin. */
export function attachWheelZoom(panel: SVGGElement): void {
  const base = panel.getAttribute('transform') ?? '';
  let zoom = 1;
  panel.addEventListener('wheel', (event) => {
    event.preventDefault();
    const factor = (event as WheelEvent).deltaY < 0 ? 1.1 : 1 / 1.1;
    zoom = Math.min(8, Math.max(0.25, zoom * factor));
    panel.setAttribute('transform', zoom === 1 ? base : `${base} scale(${zoom})`);
    panel.setAttribute('data-zoom', String(zoom));
  });
}
