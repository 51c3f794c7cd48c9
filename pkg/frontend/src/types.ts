/** JSON documents served by the pedvis HTTP API. */

export interface FamilySummary {
  family_id: string;
  person_count: number;
  suicide_count: number;
}

export interface SectorSpec {
  disease_index: number;
  angle_start: number; // degrees, counterclockwise from east
  angle_end: number;
  filled: boolean;
}

export interface GlyphJson {
  person_id: string;
  shape: 'square' | 'circle';
  x: number; // layout units, y-axis up
  y: number;
  status: 'alive' | 'deceased' | 'suicide';
  fill_fraction: number;
  inner_scale: number;
  radial_chart: SectorSpec[] | null;
}

export interface LayoutNode {
  unit_id: string;
  generation: number;
  radius: number;
  theta: number;
  span: [number, number];
  glyphs: GlyphJson[];
}

export interface LayoutLink {
  from: string;
  to: string;
}

export interface LayoutConfigJson {
  ring_spacing: number;
  center_radius: number;
  glyph_size: number;
  partner_offset: number;
  start_angle: number;
  direction: 'ccw' | 'cw';
}

export interface LayoutDocument {
  family_id: string;
  config: LayoutConfigJson;
  max_generation: number;
  bounds: number;
  nodes: LayoutNode[];
  links: LayoutLink[];
  warnings: string[];
}

export interface DotJson {
  person_id: string;
  family_id: string;
  age_at_diagnosis: number;
}

export interface DotSeries {
  disease_index: number;
  disease_name: string;
  dots: DotJson[];
}

export interface Palette {
  status: { alive: string; deceased: string; suicide: string };
  diseases: string[];
}

export interface CompareResponse {
  left: LayoutDocument;
  right: LayoutDocument;
  dotplots: DotSeries[];
  palette: Palette;
}
