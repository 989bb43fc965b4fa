// Renders the last screen frame. Pure function of the model: the UI
// keeps no interaction state of its own.

import { ScreenModel } from './protocol.js';

export function renderScreen(doc: Document, pad: Element, model: ScreenModel, showLabels: boolean): void {
  pad.innerHTML = '';
  pad.setAttribute('data-screen', model.screen);
  pad.setAttribute('data-layout', model.layout);

  if (model.layout === 'DOT6') {
    renderDots(doc, pad, model.dots ?? [false, false, false, false, false, false]);
  } else if (model.layout === 'TEXT') {
    const region = doc.createElement('div');
    region.className = 'region text-region';
    region.textContent = model.status;
    pad.appendChild(region);
  } else {
    const rows = model.layout === 'MENU3' ? 3 : model.layout === 'MENU2' ? 2 : 5;
    for (let i = 0; i < rows; i++) {
      const region = doc.createElement('div');
      region.className = 'region band';
      region.style.height = `${100 / rows}%`;
      if (showLabels) region.textContent = model.labels[i] ?? '';
      pad.appendChild(region);
    }
  }

  const status = doc.getElementById('status');
  if (status) status.textContent = model.status;
}

// 2 columns x 3 rows, dot 1 top-left, dots 1-3 down the left column.
function renderDots(doc: Document, pad: Element, dots: boolean[]): void {
  const grid = doc.createElement('div');
  grid.className = 'dot-grid';
  for (let row = 0; row < 3; row++) {
    for (let col = 0; col < 2; col++) {
      const n = row + 1 + 3 * col;
      const dot = doc.createElement('div');
      dot.className = dots[n - 1] ? 'dot selected' : 'dot plain';
      dot.setAttribute('data-dot', String(n));
      grid.appendChild(dot);
    }
  }
  pad.appendChild(grid);
}
