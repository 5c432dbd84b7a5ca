/** Scripted end-to-end loop against a live service:
 * lasso a rendered complete-five block in the matrix view, read the
 * selector pop-up, open the explainer, check its six sections, and
 * hover a related instance to highlight it in the view.
 */

import { beforeEach, describe, expect, inject, it } from "vitest";

import { dragRectangle, lasso, markBounds, mountApp, twoCliqueNetwork } from "./helpers.js";
import type { App } from "../src/main.js";

const apiBase = inject("apiBase");

async function appWithMatrix(): Promise<App> {
    const app = mountApp(apiBase);
    await app.loadNetworkFromJson(twoCliqueNetwork());
    await app.showViz("matrix");
    await app.whenIdle();
    return app;
}

function viewSvg(): SVGSVGElement {
    const svg = document.querySelector<SVGSVGElement>("svg.view");
    expect(svg).not.toBeNull();
    return svg!;
}

function blockALassoPoints(svg: SVGSVGElement): [number, number][] {
    const blockLinks = new Set(Array.from({ length: 10 }, (_, i) => `e${i}`));
    const { x1, y1, x2, y2 } = markBounds(svg, blockLinks);
    expect(x2).toBeGreaterThan(x1);
    // inset so the sloppy hand-drawn loop stays off neighboring header marks
    const pad = -2;
    return [
        [x1 - pad, y1 - pad],
        [x2 + pad, y1 - pad],
        [x2 + pad, y2 + pad],
        [x1 - pad, y2 + pad],
        [x1 - pad, y1],
    ];
}

describe("bottom-up explanation loop", () => {
    let app: App;

    beforeEach(async () => {
        app = await appWithMatrix();
        app.state.tool = "lasso";
    });

    it("walks selection, selector, explainer, and related highlighting", async () => {
        const svg = viewSvg();
        lasso(svg, blockALassoPoints(svg));
        await app.whenIdle();

        // selector pop-up announces exactly one clique
        const selector = document.querySelector<HTMLElement>('[data-popup="selector"]');
        expect(selector).not.toBeNull();
        const message = selector!.querySelector(".selector-message")!.textContent;
        expect(message).toBe("Your selection has 1 network pattern, including 1 clique.");
        expect(message).toContain("1 clique");

        // open the explainer from the selector entry
        const entry = selector!.querySelector<HTMLButtonElement>(".instance-entry");
        expect(entry).not.toBeNull();
        expect(entry!.dataset.kind).toBe("clique");
        entry!.click();
        await app.whenIdle();

        // all six sections are present
        const explainer = document.querySelector<HTMLElement>('[data-popup="explainer"]');
        expect(explainer).not.toBeNull();
        const sections = Array.from(
            explainer!.querySelectorAll<HTMLElement>("[data-section]"),
        ).map((s) => s.dataset.section);
        expect(sections).toEqual([
            "tab-menu", "network-pattern", "data-facts",
            "visual-pattern", "variations", "related-instances",
        ]);
        expect(explainer!.querySelector(".visual-name")!.textContent).toBeTruthy();
        expect(explainer!.querySelectorAll(".variations figure")).toHaveLength(3);
        expect(explainer!.querySelector(".data-facts p")!.textContent).toContain("5");

        // the other block is a related instance; hovering highlights it
        const related = explainer!.querySelector<HTMLButtonElement>(".related-entry");
        expect(related).not.toBeNull();
        related!.dispatchEvent(new MouseEvent("mouseenter", { bubbles: true }));
        const overlays = Array.from(
            svg.querySelectorAll<SVGElement>(".related-highlight"));
        expect(overlays.length).toBeGreaterThan(0);
        const markIds = new Set(
            Array.from(svg.querySelectorAll<SVGElement>("g.marks .mark"))
                .map((m) => m.dataset.mark));
        for (const overlay of overlays) {
            expect(markIds.has(overlay.dataset.for!)).toBe(true);
        }
        related!.dispatchEvent(new MouseEvent("mouseleave", { bubbles: true }));
        expect(svg.querySelectorAll(".related-highlight")).toHaveLength(0);
    });

    it("reports an artifact for a selection over background", async () => {
        const svg = viewSvg();
        app.state.tool = "rectangle";
        dragRectangle(svg, 1, 1, 3, 3);
        await app.whenIdle();
        const selector = document.querySelector<HTMLElement>('[data-popup="selector"]');
        expect(selector).not.toBeNull();
        expect(selector!.textContent).toContain("most likely an artifact");
        expect(selector!.querySelectorAll(".instance-entry")).toHaveLength(0);
    });

    it("escape closes the pop-up", async () => {
        const svg = viewSvg();
        lasso(svg, blockALassoPoints(svg));
        await app.whenIdle();
        expect(document.querySelector(".popup")).not.toBeNull();
        document.dispatchEvent(new KeyboardEvent("keydown", { key: "Escape" }));
        expect(document.querySelector(".popup")).toBeNull();
    });
});

describe("top-down mode", () => {
    it("highlights every instance and lists counts", async () => {
        const app = await appWithMatrix();
        await app.setMode("top-down");
        await app.whenIdle();
        const panel = document.querySelector<HTMLElement>(".summary-panel");
        expect(panel).not.toBeNull();
        expect(panel!.hidden).toBe(false);
        expect(panel!.textContent).toContain("clique: 2");
        const svg = viewSvg();
        const overlays = svg.querySelectorAll(".highlight");
        expect(overlays.length).toBeGreaterThan(0);
        const markIds = new Set(
            Array.from(svg.querySelectorAll<SVGElement>("g.marks .mark"))
                .map((m) => m.dataset.mark));
        for (const overlay of Array.from(overlays) as SVGElement[]) {
            expect(markIds.has(overlay.dataset.for!)).toBe(true);
        }

        // clicking a listed instance opens the explainer
        const chip = panel!.querySelector<HTMLButtonElement>(".instance-entry");
        chip!.click();
        await app.whenIdle();
        expect(document.querySelector('[data-popup="explainer"]')).not.toBeNull();

        // toggling back clears the overlays and the panel
        await app.setMode("bottom-up");
        expect(svg.querySelectorAll(".highlight")).toHaveLength(0);
        expect(panel!.hidden).toBe(true);
    });
});
