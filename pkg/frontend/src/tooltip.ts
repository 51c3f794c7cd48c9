export interface Tooltip {
  el: HTMLDivElement;
  show(x: number, y: number, text: string): void;
  hide(): void;
}

/** "P7 · family 149 · diagnosed at 34"; the age clause drops out when absent. */
export function formatDotTooltip(personId: string, familyId: string, age: string | null): string {
  const base = `${personId} · family ${familyId}`;
  if (age === null || age === '') return base;
  return `${base} · diagnosed at ${age}`;
}

export function createTooltip(parent: HTMLElement): Tooltip {
  const el = document.createElement('div');
  el.className = 'tooltip';
  el.hidden = true;
  parent.appendChild(el);
  return {
    el,
    show(x: number, y: number, text: string): void {
      el.textContent = text;
      el.style.left = `${x + 12}px`;
      el.style.top = `${y + 12}px`;
      el.hidden = false;
    },
    hide(): void {
      el.hidden = true;
      el.textContent = '';
    },
  };
}
