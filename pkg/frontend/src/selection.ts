/** Rubber-band rectangle and freehand lasso gestures on a rendered view. */

import type { Region } from "./api.js";
import { toViewBox } from "./render.js";

export type Tool = "rectangle" | "lasso";

const SVG_NS = "http://www.w3.org/2000/svg";
const LASSO_MIN_STEP = 4;

export interface GestureHandle {
    dispose(): void;
}

/**
 * Attach selection gestures to a view. `onRegion` fires on mouse-up with the
 * drawn region in viewBox coordinates; a click without drag produces a
 * zero-area rectangle (the service point-picks it).
 */
export function attachSelection(svg: SVGSVGElement, tool: () => Tool,
                                enabled: () => boolean,
                                onRegion: (region: Region) => void): GestureHandle {
    let tracking = false;
    let points: [number, number][] = [];

    const feedback = () => svg.querySelector("g.gesture")!;

    const drawFeedback = () => {
        const layer = feedback();
        layer.textContent = "";
        if (points.length === 0) return;
        if (tool() === "rectangle") {
            const [x1, y1] = points[0];
            const [x2, y2] = points[points.length - 1];
            const rect = document.createElementNS(SVG_NS, "rect");
            rect.setAttribute("x", String(Math.min(x1, x2)));
            rect.setAttribute("y", String(Math.min(y1, y2)));
            rect.setAttribute("width", String(Math.abs(x2 - x1)));
            rect.setAttribute("height", String(Math.abs(y2 - y1)));
            rect.classList.add("rubber-band");
            layer.appendChild(rect);
        } else {
            const path = document.createElementNS(SVG_NS, "polygon");
            path.setAttribute("points", points.map(([x, y]) => `${x},${y}`).join(" "));
            path.classList.add("lasso-path");
            layer.appendChild(path);
        }
    };

    const down = (event: MouseEvent) => {
        if (!enabled() || event.button !== 0) return;
        tracking = true;
        points = [toViewBox(svg, event.clientX, event.clientY)];
        drawFeedback();
    };

    const move = (event: MouseEvent) => {
        if (!tracking) return;
        const pt = toViewBox(svg, event.clientX, event.clientY);
        if (tool() === "rectangle") {
            points = [points[0], pt];
        } else {
            const [lx, ly] = points[points.length - 1];
            if (Math.hypot(pt[0] - lx, pt[1] - ly) >= LASSO_MIN_STEP) {
                points.push(pt);
            }
        }
        drawFeedback();
    };

    const up = (event: MouseEvent) => {
        if (!tracking) return;
        tracking = false;
        const pt = toViewBox(svg, event.clientX, event.clientY);
        let region: Region;
        if (tool() === "rectangle") {
            region = { kind: "rectangle", points: [points[0], pt] };
        } else if (points.length >= 3) {
            region = { kind: "lasso", points };
        } else {
            // a lasso too short to close degrades to a point pick
            region = { kind: "rectangle", points: [points[0], points[0]] };
        }
        points = [];
        feedback().textContent = "";
        onRegion(region);
    };

    svg.addEventListener("mousedown", down);
    svg.addEventListener("mousemove", move);
    svg.addEventListener("mouseup", up);
    return {
        dispose() {
            svg.removeEventListener("mousedown", down);
            svg.removeEventListener("mousemove", move);
            svg.removeEventListener("mouseup", up);
        },
    };
}
