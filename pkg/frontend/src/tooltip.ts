/** One shared tooltip element, positioned next to the pointer. */

export class Tooltip {
  private el: HTMLDivElement;

  constructor(parent: HTMLElement) {
    this.el = document.createElement("div");
    this.el.className = "tooltip";
    this.el.style.display = "none";
    parent.appendChild(this.el);
  }

  show(clientX: number, clientY: number, lines: string[]): void {
    this.el.textContent = "";
    for (const line of lines) {
      const row = document.createElement("div");
      row.textContent = line;
      this.el.appendChild(row);
    }
    this.el.style.display = "block";
    this.el.style.left = `${clientX + 12}px`;
    this.el.style.top = `${clientY + 12}px`;
  }

  hide(): void {
    this.el.style.display = "none";
  }
}
