import type { DotSeries, GlyphJson, LayoutDocument, Palette } from './types.js';

export const SVG_NS = 'http://www.w3.org/2000/svg';

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

/** Layout coordinates are y-up; SVG is y-down. */
function toScreen(x: number, y: number, k: number): [number, number] {
  return [k * x, -k * y];
}

function sectorPath(cx: number, cy: number, r: number, startDeg: number, endDeg: number): string {
  const a0 = (startDeg * Math.PI) / 180;
  const a1 = (endDeg * Math.PI) / 180;
  const x0 = cx + r * Math.cos(a0);
  const y0 = cy - r * Math.sin(a0);
  const x1 = cx + r * Math.cos(a1);
  const y1 = cy - r * Math.sin(a1);
  const largeArc = endDeg - startDeg > 180 ? 1 : 0;
  // sweep 0 walks counterclockwise on a y-down canvas
  return `M ${cx} ${cy} L ${x0} ${y0} A ${r} ${r} 0 ${largeArc} 0 ${x1} ${y1} Z`;
}

function radialChart(
  glyph: GlyphJson,
  gx: number,
  gy: number,
  radius: number,
  palette: Palette,
): SVGGElement {
  const group = svgEl('g', {
    class: 'radial-chart',
    'data-person': glyph.person_id,
    transform: `translate(${gx} ${gy})`,
  });
  for (const sector of glyph.radial_chart ?? []) {
    const fullCircle = sector.angle_end - sector.angle_start >= 360 - 1e-9;
    const color = palette.diseases[sector.disease_index];
    if (fullCircle) {
      const circle = svgEl('circle', { class: 'sector', cx: 0, cy: 0, r: radius });
      if (sector.filled && color) circle.setAttribute('fill', color);
      else circle.classList.add('sector-empty');
      group.appendChild(circle);
      continue;
    }
    const path = svgEl('path', {
      class: 'sector',
      d: sectorPath(0, 0, radius, sector.angle_start, sector.angle_end),
    });
    if (sector.filled && color) path.setAttribute('fill', color);
    else path.classList.add('sector-empty');
    group.appendChild(path);
  }
  return group;
}

function glyphShape(
  glyph: GlyphJson,
  familyId: string,
  k: number,
  size: number,
  palette: Palette,
): SVGGElement {
  const [gx, gy] = toScreen(glyph.x, glyph.y, k);
  const status = palette.status[glyph.status];
  const group = svgEl('g', { class: 'person', 'data-person': glyph.person_id });

  const outer =
    glyph.shape === 'square'
      ? svgEl('rect', {
          x: gx - size / 2,
          y: gy - size / 2,
          width: size,
          height: size,
        })
      : svgEl('circle', { cx: gx, cy: gy, r: size / 2 });
  outer.classList.add('glyph');
  outer.setAttribute('data-person', glyph.person_id);
  outer.setAttribute('data-family', familyId);
  outer.setAttribute('fill', 'none');
  outer.setAttribute('stroke', status);
  group.appendChild(outer);

  if (glyph.inner_scale > 0) {
    const inner =
      glyph.shape === 'square'
        ? svgEl('rect', {
            x: gx - (size * glyph.inner_scale) / 2,
            y: gy - (size * glyph.inner_scale) / 2,
            width: size * glyph.inner_scale,
            height: size * glyph.inner_scale,
          })
        : svgEl('circle', { cx: gx, cy: gy, r: (size * glyph.inner_scale) / 2 });
    inner.classList.add('glyph-fill');
    inner.setAttribute('fill', status);
    group.appendChild(inner);
  }

  if (glyph.radial_chart && glyph.radial_chart.length > 0) {
    group.appendChild(radialChart(glyph, gx, gy, size * 0.8, palette));
  }
  return group;
}

/**
 * Draw one family tree into `group`, fitting the layout's bounds into a
 * square of half-width `halfExtent` centered on the group's origin.
 */
export function renderPanel(
  group: SVGGElement,
  layout: LayoutDocument,
  palette: Palette,
  halfExtent: number,
): void {
  group.replaceChildren();
  group.setAttribute('data-family', layout.family_id);
  const k = layout.bounds > 0 ? halfExtent / layout.bounds : 1;
  const size = Math.max(4, k * layout.config.glyph_size);

  const positions = new Map<string, [number, number]>();
  for (const node of layout.nodes) {
    const x = node.radius * Math.cos(node.theta);
    const y = node.radius * Math.sin(node.theta);
    positions.set(node.unit_id, toScreen(x, y, k));
  }

  for (const link of layout.links) {
    const from = positions.get(link.from);
    const to = positions.get(link.to);
    if (!from || !to) continue;
    group.appendChild(
      svgEl('path', {
        class: 'link',
        d: `M ${from[0]} ${from[1]} L ${to[0]} ${to[1]}`,
      }),
    );
  }

  for (const node of layout.nodes) {
    const unit = svgEl('g', { class: 'unit', 'data-unit': node.unit_id });
    if (node.glyphs.length === 2) {
      const [a, b] = node.glyphs;
      const [ax, ay] = toScreen(a.x, a.y, k);
      const [bx, by] = toScreen(b.x, b.y, k);
      unit.appendChild(
        svgEl('line', { class: 'partner-bar', x1: ax, y1: ay, x2: bx, y2: by }),
      );
    }
    for (const glyph of node.glyphs) {
      unit.appendChild(glyphShape(glyph, layout.family_id, k, size, palette));
    }
    group.appendChild(unit);
  }

  const label = svgEl('text', {
    class: 'family-label',
    x: 0,
    y: -halfExtent - 10,
    'text-anchor': 'middle',
  });
  label.textContent = layout.family_id;
  group.appendChild(label);
}

/** Draw the shared dot-plot strip: one stacked column per disease. */
export function renderDotplots(
  group: SVGGElement,
  series: DotSeries[],
  palette: Palette,
  width: number,
  height: number,
): void {
  group.replaceChildren();
  const n = Math.max(1, series.length);
  const baseline = height - 30;
  const maxCount = series.reduce((m, s) => Math.max(m, s.dots.length), 0);
  const spacing = maxCount > 0 ? Math.min(9, (baseline - 10) / maxCount) : 9;
  const radius = Math.min(3.5, spacing * 0.45);

  group.appendChild(
    svgEl('line', { class: 'axis', x1: 0, y1: baseline, x2: width, y2: baseline }),
  );
  for (const s of series) {
    const cx = ((s.disease_index + 0.5) * width) / n;
    const color = palette.diseases[s.disease_index] ?? 'currentColor';
    s.dots.forEach((dot, row) => {
      group.appendChild(
        svgEl('circle', {
          class: 'dot',
          cx,
          cy: baseline - radius - 2 - row * spacing,
          r: radius,
          fill: color,
          'data-person': dot.person_id,
          'data-family': dot.family_id,
          'data-age': dot.age_at_diagnosis,
        }),
      );
    });
    const label = svgEl('text', {
      class: 'dot-label',
      x: cx,
      y: baseline + 12,
      'text-anchor': 'end',
      transform: `rotate(-35 ${cx} ${baseline + 12})`,
    });
    label.textContent = s.disease_name;
    group.appendChild(label);
  }
}

/** Status + disease color chips, colors straight from the served palette. */
export function renderLegend(container: HTMLElement, palette: Palette, series: DotSeries[]): void {
  container.replaceChildren();
  const entries: Array<[string, string]> = [
    [palette.status.alive, 'alive'],
    [palette.status.deceased, 'deceased'],
    [palette.status.suicide, 'suicide'],
  ];
  for (const s of series) {
    const color = palette.diseases[s.disease_index];
    if (color) entries.push([color, s.disease_name]);
  }
  for (const [color, text] of entries) {
    const chip = document.createElement('span');
    chip.className = 'legend-chip';
    const swatch = document.createElement('span');
    swatch.className = 'legend-swatch';
    swatch.style.backgroundColor = color;
    const label = document.createElement('span');
    label.textContent = text;
    chip.append(swatch, label);
    container.appendChild(chip);
  }
}
