import { App, mount } from "../src/main.js";

/** Two disjoint complete-five blocks: each is exactly one clique and
 * nothing else, so a selected clique always has one related instance. */
export function twoCliqueNetwork(): string {
    const nodes: { id: string; label: string }[] = [];
    const links: { id: string; source: string; target: string; weight: number }[] = [];
    let e = 0;
    for (const prefix of ["a", "b"]) {
        for (let i = 0; i < 5; i++) nodes.push({ id: `${prefix}${i}`, label: `${prefix}${i}` });
        for (let i = 0; i < 5; i++) {
            for (let j = i + 1; j < 5; j++) {
                links.push({ id: `e${e++}`, source: `${prefix}${i}`, target: `${prefix}${j}`, weight: 1 });
            }
        }
    }
    return JSON.stringify({ directed: false, temporal: false, nodes, links });
}

export function mountApp(apiBase: string): App {
    document.body.innerHTML = "";
    const host = document.createElement("div");
    document.body.appendChild(host);
    return mount(host, apiBase);
}

export function mouse(target: Element, type: string, x: number, y: number): void {
    target.dispatchEvent(new MouseEvent(type, {
        bubbles: true,
        cancelable: true,
        clientX: x,
        clientY: y,
        button: 0,
    }));
}

/** Drag a lasso through the given viewBox points on the view svg. */
export function lasso(svg: SVGSVGElement, points: [number, number][]): void {
    mouse(svg, "mousedown", points[0][0], points[0][1]);
    for (const [x, y] of points.slice(1)) {
        mouse(svg, "mousemove", x, y);
    }
    const last = points[points.length - 1];
    mouse(svg, "mouseup", last[0], last[1]);
}

export function dragRectangle(svg: SVGSVGElement, x1: number, y1: number,
                              x2: number, y2: number): void {
    mouse(svg, "mousedown", x1, y1);
    mouse(svg, "mousemove", x2, y2);
    mouse(svg, "mouseup", x2, y2);
}

/** Bounding box (in viewBox coordinates) of the marks of given elements. */
export function markBounds(svg: SVGSVGElement, elements: Set<string>):
        { x1: number; y1: number; x2: number; y2: number } {
    let x1 = Infinity, y1 = Infinity, x2 = -Infinity, y2 = -Infinity;
    for (const mark of Array.from(svg.querySelectorAll<SVGElement>("g.marks .mark"))) {
        if (!elements.has(mark.dataset.element ?? "")) continue;
        const grow = (x: number, y: number) => {
            x1 = Math.min(x1, x); y1 = Math.min(y1, y);
            x2 = Math.max(x2, x); y2 = Math.max(y2, y);
        };
        const num = (name: string) => Number(mark.getAttribute(name));
        switch (mark.tagName) {
            case "circle":
                grow(num("cx") - num("r"), num("cy") - num("r"));
                grow(num("cx") + num("r"), num("cy") + num("r"));
                break;
            case "rect":
                grow(num("x"), num("y"));
                grow(num("x") + num("width"), num("y") + num("height"));
                break;
            case "line":
                grow(num("x1"), num("y1"));
                grow(num("x2"), num("y2"));
                break;
            default:
                break;
        }
    }
    return { x1, y1, x2, y2 };
}
