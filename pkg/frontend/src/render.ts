/** SVG rendering of served mark geometry. */

import type { Mark, MarkGeometry } from "./api.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const TYPE_PALETTE = ["#4878a8", "#b0603c", "#5a9367", "#8c6aa8", "#bb8a36", "#767676"];

export function colorForType(type: string | undefined): string {
    if (!type) return "#55606a";
    let hash = 0;
    for (const ch of type) hash = (hash * 31 + ch.charCodeAt(0)) >>> 0;
    return TYPE_PALETTE[hash % TYPE_PALETTE.length];
}

function el(tag: string, attrs: Record<string, string | number>): SVGElement {
    const node = document.createElementNS(SVG_NS, tag) as SVGElement;
    for (const [key, value] of Object.entries(attrs)) {
        node.setAttribute(key, String(value));
    }
    return node;
}

function arcPath(p: Record<string, number>): string {
    const { cx, cy, r, a0, a1 } = p;
    const x0 = cx + r * Math.cos(a0);
    const y0 = cy + r * Math.sin(a0);
    const x1 = cx + r * Math.cos(a1);
    const y1 = cy + r * Math.sin(a1);
    const span = Math.abs(a1 - a0);
    // sweep-flag 0 draws toward decreasing angle: counter-clockwise on screen
    const sweep = a1 < a0 ? 0 : 1;
    if (span >= 2 * Math.PI - 1e-9) {
        // full circle: two half arcs
        const xm = cx + r * Math.cos(a0 + Math.PI);
        const ym = cy + r * Math.sin(a0 + Math.PI);
        return `M ${x0} ${y0} A ${r} ${r} 0 0 ${sweep} ${xm} ${ym} ` +
            `A ${r} ${r} 0 0 ${sweep} ${x0} ${y0}`;
    }
    const largeArc = span > Math.PI ? 1 : 0;
    return `M ${x0} ${y0} A ${r} ${r} 0 ${largeArc} ${sweep} ${x1} ${y1}`;
}

function isNodeMark(mark: Mark): boolean {
    const prefix = mark.id.split(":", 1)[0];
    return prefix === "node" || prefix === "row" || prefix === "col" || prefix === "rowlab";
}

function renderMark(mark: Mark, labels: Map<string, string>): SVGElement {
    const p = mark.params;
    let node: SVGElement;
    switch (mark.shape) {
        case "disc":
            node = el("circle", { cx: p.x, cy: p.y, r: p.r, fill: "#36414c" });
            break;
        case "rect": {
            const isHeader = mark.id.startsWith("row:") || mark.id.startsWith("col:")
                || mark.id.startsWith("rowlab:");
            const shade = mark.channels.shade ?? 0;
            node = el("rect", {
                x: p.x, y: p.y, width: p.w, height: p.h,
                fill: isHeader ? "#e8ebee" : colorForType(mark.channels.type),
                "fill-opacity": isHeader ? 1 : Math.max(shade, 0.15),
                stroke: isHeader ? "#c6ccd2" : "none",
            });
            break;
        }
        case "segment":
            node = el("line", {
                x1: p.x1, y1: p.y1, x2: p.x2, y2: p.y2,
                stroke: colorForType(mark.channels.type),
                "stroke-width": mark.channels.thickness ?? 2,
                "stroke-linecap": "round",
            });
            break;
        case "arc":
            node = el("path", {
                d: arcPath(p), fill: "none",
                stroke: colorForType(mark.channels.type),
                "stroke-width": mark.channels.thickness ?? 2,
            });
            break;
    }
    node.classList.add("mark");
    node.dataset.mark = mark.id;
    node.dataset.element = mark.element;
    node.dataset.kind = isNodeMark(mark) ? "node" : "link";
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = labels.get(mark.element) ?? mark.element;
    node.appendChild(title);
    return node;
}

/** Draw the geometry into a fresh <svg>, replacing the host's content. */
export function renderView(host: HTMLElement, geom: MarkGeometry,
                           labels: Map<string, string> = new Map()): SVGSVGElement {
    host.textContent = "";
    const svg = document.createElementNS(SVG_NS, "svg") as SVGSVGElement;
    svg.setAttribute("viewBox", `0 0 ${geom.canvas.w} ${geom.canvas.h}`);
    svg.setAttribute("data-viz", geom.viz);
    svg.classList.add("view");
    const markLayer = el("g", {});
    markLayer.classList.add("marks");
    for (const mark of geom.marks) {
        markLayer.appendChild(renderMark(mark, labels));
    }
    const overlayLayer = el("g", {});
    overlayLayer.classList.add("overlays");
    const gestureLayer = el("g", {});
    gestureLayer.classList.add("gesture");
    svg.appendChild(markLayer);
    svg.appendChild(overlayLayer);
    svg.appendChild(gestureLayer);
    host.appendChild(svg);
    return svg;
}

export function renderEmptyNotice(host: HTMLElement, text: string): void {
    host.textContent = "";
    const notice = document.createElement("p");
    notice.className = "empty-notice";
    notice.textContent = text;
    host.appendChild(notice);
}

/** Map client coordinates to viewBox coordinates. */
export function toViewBox(svg: SVGSVGElement, clientX: number, clientY: number):
        [number, number] {
    const rect = svg.getBoundingClientRect();
    const viewBox = svg.getAttribute("viewBox")!.split(" ").map(Number);
    if (rect.width === 0 || rect.height === 0) {
        // headless test environments report a zero rect: coordinates pass through
        return [clientX, clientY];
    }
    return [
        viewBox[0] + (clientX - rect.left) * (viewBox[2] / rect.width),
        viewBox[1] + (clientY - rect.top) * (viewBox[3] / rect.height),
    ];
}
