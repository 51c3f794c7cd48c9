import type { CompareResponse, FamilySummary } from './types.js';

async function getJson<T>(url: string): Promise<T> {
  const resp = await fetch(url);
  if (!resp.ok) {
    let message = `${resp.status}`;
    try {
      const body = (await resp.json()) as { error?: string };
      if (body.error) message = body.error;
    } catch {
      /* non-JSON error body; keep the status code */
    }
    throw new Error(message);
  }
  return (await resp.json()) as T;
}

export function fetchFamilies(): Promise<FamilySummary[]> {
  return getJson<FamilySummary[]>('/api/families');
}

export function fetchCompare(left: string, right: string): Promise<CompareResponse> {
  const params = new URLSearchParams({ left, right });
  return getJson<CompareResponse>(`/api/compare?${params}`);
}
