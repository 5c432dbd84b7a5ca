import { describe, expect, it } from "vitest";

import type { MarkGeometry } from "../src/api.js";
import { iconSvg } from "../src/icons.js";
import { colorForType, renderView, toViewBox } from "../src/render.js";

const geometry: MarkGeometry = {
    viz: "node-link",
    canvas: { w: 400, h: 300 },
    marks: [
        { id: "link:e0", element: "e0", shape: "segment",
          params: { x1: 10, y1: 10, x2: 200, y2: 120 },
          channels: { thickness: 3, type: "trade" } },
        { id: "loop:e1", element: "e1", shape: "arc",
          params: { cx: 50, cy: 50, r: 8, a0: 0, a1: -2 * Math.PI },
          channels: { thickness: 2 } },
        { id: "node:a", element: "a", shape: "disc",
          params: { x: 10, y: 10, r: 6 }, channels: {} },
        { id: "row:a", element: "a", shape: "rect",
          params: { x: 0, y: 0, w: 20, h: 10 }, channels: {} },
    ],
};

describe("renderView", () => {
    it("creates one svg element per mark with element back-references", () => {
        const host = document.createElement("div");
        const svg = renderView(host, geometry, new Map([["a", "Anne"]]));
        const marks = svg.querySelectorAll("g.marks .mark");
        expect(marks).toHaveLength(4);
        const disc = svg.querySelector<SVGElement>('[data-mark="node:a"]')!;
        expect(disc.tagName).toBe("circle");
        expect(disc.dataset.element).toBe("a");
        expect(disc.dataset.kind).toBe("node");
        expect(disc.querySelector("title")!.textContent).toBe("Anne");
        const seg = svg.querySelector<SVGElement>('[data-mark="link:e0"]')!;
        expect(seg.dataset.kind).toBe("link");
        expect(seg.getAttribute("stroke-width")).toBe("3");
        expect(svg.getAttribute("viewBox")).toBe("0 0 400 300");
    });

    it("renders full-circle arcs as closed two-arc paths", () => {
        const host = document.createElement("div");
        const svg = renderView(host, geometry);
        const path = svg.querySelector<SVGElement>('[data-mark="loop:e1"]')!;
        const d = path.getAttribute("d")!;
        expect(d.match(/A /g)).toHaveLength(2);
        expect(path.getAttribute("fill")).toBe("none");
    });

    it("keeps layer order marks < overlays < gesture", () => {
        const host = document.createElement("div");
        const svg = renderView(host, geometry);
        const layers = Array.from(svg.children).map((c) => c.getAttribute("class"));
        expect(layers).toEqual(["marks", "overlays", "gesture"]);
    });
});

describe("toViewBox", () => {
    it("passes coordinates through when the layout box is degenerate", () => {
        const host = document.createElement("div");
        const svg = renderView(host, geometry);
        expect(toViewBox(svg, 123, 45)).toEqual([123, 45]);
    });
});

describe("colorForType", () => {
    it("is stable per type and distinguishes untyped links", () => {
        expect(colorForType("trade")).toBe(colorForType("trade"));
        expect(colorForType(undefined)).toBe(colorForType(""));
    });
});

describe("iconSvg", () => {
    it("renders every family and variant", () => {
        for (const key of ["net/clique", "matrix/fan", "matrix/fan-v3",
                           "node-link/hub-v1", "time-arcs/reciprocal-link"]) {
            const svg = iconSvg(key);
            expect(svg.startsWith("<svg")).toBe(true);
            expect(svg.endsWith("</svg>")).toBe(true);
        }
    });
});
