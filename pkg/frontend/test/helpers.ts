import type { CompareResponse, FamilySummary, LayoutDocument, Palette } from '../src/types.js';
import compareJson from './fixtures/compare.json';
import familiesJson from './fixtures/families.json';

export function loadCompareFixture(): CompareResponse {
  return JSON.parse(JSON.stringify(compareJson)) as CompareResponse;
}

export function loadFamiliesFixture(): FamilySummary[] {
  return JSON.parse(JSON.stringify(familiesJson)) as FamilySummary[];
}

export function glyphCount(layout: LayoutDocument): number {
  return layout.nodes.reduce((n, node) => n + node.glyphs.length, 0);
}

const PALETTE: Palette = {
  status: { alive: 'teal', deceased: 'gray', suicide: 'black' },
  diseases: ['orchid'],
};

/** Tiny synthetic compare body whose panels are labeled by family id. */
export function makeCompareBody(left: string, right: string): CompareResponse {
  const layout = (familyId: string): LayoutDocument => ({
    family_id: familyId,
    config: {
      ring_spacing: 80,
      center_radius: 0,
      glyph_size: 12,
      partner_offset: 8,
      start_angle: 0,
      direction: 'ccw',
    },
    max_generation: 0,
    bounds: 20,
    nodes: [
      {
        unit_id: `${familyId}_P1`,
        generation: 0,
        radius: 0,
        theta: 0,
        span: [0, 6.28318531],
        glyphs: [
          {
            person_id: `${familyId}_P1`,
            shape: 'square',
            x: 0,
            y: 0,
            status: 'alive',
            fill_fraction: 0.4,
            inner_scale: 0.632455532,
            radial_chart: null,
          },
        ],
      },
    ],
    links: [],
    warnings: [],
  });
  return {
    left: layout(left),
    right: layout(right),
    dotplots: [],
    palette: PALETTE,
  };
}
