/** Application wiring: toolbar, view, selection loop, pop-ups, top-down mode. */

import { ApiClient, ApiError } from "./api.js";
import type { InstancePreview, MarkGeometry, Region, Viz } from "./api.js";
import { clearHighlights, focusElements, highlightElements } from "./highlight.js";
import { PopupHost, kindLabel } from "./popups.js";
import { renderEmptyNotice, renderView } from "./render.js";
import { attachSelection } from "./selection.js";
import type { GestureHandle } from "./selection.js";
import { initialState } from "./state.js";
import type { Mode, ViewState } from "./state.js";
import { SAMPLE_NETWORKS } from "./sample-data.js";

const VIZ_KINDS: Viz[] = ["node-link", "matrix", "time-arcs"];

export class App {
    readonly state: ViewState = initialState();
    readonly api: ApiClient;
    private container: HTMLElement;
    private viewHost!: HTMLElement;
    private summaryPanel!: HTMLElement;
    private popups!: PopupHost;
    private toolbar!: HTMLElement;
    private svg: SVGSVGElement | null = null;
    private geometry: MarkGeometry | null = null;
    private labels = new Map<string, string>();
    private gesture: GestureHandle | null = null;
    private pending: Promise<unknown> = Promise.resolve();

    constructor(container: HTMLElement, baseUrl: string) {
        this.container = container;
        this.api = new ApiClient(baseUrl);
        this.buildChrome();
    }

    /** Resolves when all in-flight requests triggered by UI events settle. */
    async whenIdle(): Promise<void> {
        let last;
        do {
            last = this.pending;
            await last.catch(() => undefined);
        } while (last !== this.pending);
    }

    private track<T>(work: Promise<T>): Promise<T> {
        this.pending = work.catch(() => undefined);
        return work;
    }

    private buildChrome(): void {
        this.container.classList.add("motiflens-app");
        this.toolbar = document.createElement("div");
        this.toolbar.className = "toolbar";
        this.container.appendChild(this.toolbar);

        const samples = document.createElement("select");
        samples.className = "sample-picker";
        samples.innerHTML = `<option value="">load sample…</option>` +
            Object.keys(SAMPLE_NETWORKS).map((n) => `<option>${n}</option>`).join("");
        samples.addEventListener("change", () => {
            if (samples.value) void this.loadNetworkFromJson(SAMPLE_NETWORKS[samples.value]);
        });
        this.toolbar.appendChild(samples);

        const file = document.createElement("input");
        file.type = "file";
        file.accept = ".json,.csv";
        file.className = "file-picker";
        file.addEventListener("change", () => {
            const chosen = file.files?.[0];
            if (!chosen) return;
            void this.track(chosen.text().then((text) => this.loadNetworkFromJson(
                text, chosen.name.endsWith(".csv") ? "csv" : "json")));
        });
        this.toolbar.appendChild(file);

        for (const viz of VIZ_KINDS) {
            const tab = document.createElement("button");
            tab.className = "viz-tab";
            tab.dataset.viz = viz;
            tab.textContent = viz;
            tab.addEventListener("click", () => void this.showViz(viz));
            this.toolbar.appendChild(tab);
        }

        const tool = document.createElement("button");
        tool.className = "tool-toggle";
        tool.textContent = "tool: rectangle";
        tool.addEventListener("click", () => {
            this.state.tool = this.state.tool === "rectangle" ? "lasso" : "rectangle";
            tool.textContent = `tool: ${this.state.tool}`;
        });
        this.toolbar.appendChild(tool);

        const mode = document.createElement("button");
        mode.className = "mode-toggle";
        mode.textContent = "mode: bottom-up";
        mode.addEventListener("click", () => {
            const next: Mode = this.state.mode === "bottom-up" ? "top-down" : "bottom-up";
            mode.textContent = `mode: ${next}`;
            void this.setMode(next);
        });
        this.toolbar.appendChild(mode);

        this.viewHost = document.createElement("div");
        this.viewHost.className = "view-host";
        this.container.appendChild(this.viewHost);
        renderEmptyNotice(this.viewHost, "Load a network to begin.");

        this.summaryPanel = document.createElement("aside");
        this.summaryPanel.className = "summary-panel";
        this.summaryPanel.hidden = true;
        this.container.appendChild(this.summaryPanel);

        this.popups = new PopupHost(this.container);
    }

    // -- network + view -----------------------------------------------------

    loadNetworkFromJson(data: string, format: "json" | "csv" = "json"): Promise<void> {
        return this.track((async () => {
            const uploaded = await this.api.uploadNetwork(data, format);
            this.state.networkId = uploaded.id;
            this.state.temporal = uploaded.summary.temporal;
            this.state.selection = null;
            this.state.explained = null;
            this.popups.close();
            this.labels = new Map();
            if (format === "json") {
                try {
                    const doc = JSON.parse(data);
                    for (const node of doc.nodes ?? []) {
                        this.labels.set(node.id, node.label ?? node.id);
                    }
                } catch {
                    /* labels stay empty for non-json uploads */
                }
            }
            this.updateVizTabs();
            await this.showViz(this.state.temporal ? "time-arcs" : "node-link");
        })());
    }

    private updateVizTabs(): void {
        for (const tab of Array.from(
                this.toolbar.querySelectorAll<HTMLButtonElement>(".viz-tab"))) {
            tab.disabled = tab.dataset.viz === "time-arcs" && !this.state.temporal;
            tab.classList.toggle("active", tab.dataset.viz === this.state.viz);
        }
    }

    showViz(viz: Viz): Promise<void> {
        return this.track((async () => {
            if (!this.state.networkId) return;
            this.state.viz = viz;
            this.updateVizTabs();
            this.popups.close();
            try {
                this.geometry = await this.api.getView(this.state.networkId, viz);
            } catch (error) {
                if (error instanceof ApiError) {
                    renderEmptyNotice(this.viewHost, `${viz}: ${error.message}`);
                    return;
                }
                throw error;
            }
            if (this.geometry.marks.length === 0) {
                renderEmptyNotice(this.viewHost, "This network has nothing to draw.");
                return;
            }
            this.gesture?.dispose();
            this.svg = renderView(this.viewHost, this.geometry, this.labels);
            this.gesture = attachSelection(
                this.svg,
                () => this.state.tool,
                () => this.state.mode === "bottom-up",
                (region) => void this.handleRegion(region));
            this.svg.addEventListener("click", (event) => this.handleMarkClick(event));
            if (this.state.mode === "top-down") {
                await this.refreshTopDown();
            }
        })());
    }

    // -- bottom-up loop -------------------------------------------------------

    private handleRegion(region: Region): Promise<void> {
        return this.track((async () => {
            if (!this.state.networkId || !this.svg) return;
            let response;
            try {
                response = await this.api.postSelection(
                    this.state.networkId, this.state.viz, region);
            } catch (error) {
                if (error instanceof ApiError) {
                    this.popups.showNotice(`Selection failed: ${error.message}`);
                    return;
                }
                this.popups.showNotice("Network error; try the selection again.");
                return;
            }
            this.state.selection = response;
            this.state.openPopup = "selector";
            clearHighlights(this.svg);
            focusElements(this.svg, [...response.selection.nodes, ...response.selection.links]);
            this.popups.showSelector(response, this.callbacks());
        })());
    }

    explain(instance: InstancePreview): Promise<void> {
        return this.track((async () => {
            if (!this.state.networkId || !this.svg) return;
            let explanation;
            try {
                explanation = await this.api.getExplanation(
                    this.state.networkId, instance.key, this.state.viz);
            } catch (error) {
                if (error instanceof ApiError && error.status === 404) {
                    this.popups.showNotice("This pattern is no longer available.");
                    return;
                }
                throw error;
            }
            this.state.explained = instance;
            this.state.openPopup = "explainer";
            clearHighlights(this.svg);
            clearHighlights(this.svg, "related-highlight");
            highlightElements(this.svg, [...instance.nodes, ...instance.links]);
            this.popups.showExplainer(
                explanation, this.state.selection?.instances ?? [], this.callbacks());
        })());
    }

    private callbacks() {
        return {
            onExplain: (instance: InstancePreview) => void this.explain(instance),
            onHoverRelated: (instance: InstancePreview | null) => {
                if (!this.svg) return;
                this.state.hoveredRelated = instance;
                clearHighlights(this.svg, "related-highlight");
                if (instance) {
                    highlightElements(this.svg,
                        [...instance.nodes, ...instance.links], "related-highlight");
                }
            },
            onClose: () => {
                this.state.openPopup = null;
                this.state.explained = null;
                if (this.svg) {
                    clearHighlights(this.svg);
                    clearHighlights(this.svg, "related-highlight");
                    focusElements(this.svg, []);
                }
            },
        };
    }

    // -- top-down mode --------------------------------------------------------

    setMode(mode: Mode): Promise<void> {
        return this.track((async () => {
            this.state.mode = mode;
            this.popups.close();
            if (!this.svg) return;
            clearHighlights(this.svg);
            clearHighlights(this.svg, "related-highlight");
            focusElements(this.svg, []);
            if (mode === "top-down") {
                await this.refreshTopDown();
            } else {
                this.summaryPanel.hidden = true;
                this.summaryPanel.textContent = "";
            }
        })());
    }

    private async refreshTopDown(): Promise<void> {
        if (!this.state.networkId || !this.svg) return;
        const result = await this.api.getAllPatterns(this.state.networkId);
        const everything = new Set<string>();
        for (const inst of result.instances) {
            inst.nodes.forEach((n) => everything.add(n));
            inst.links.forEach((l) => everything.add(l));
        }
        clearHighlights(this.svg);
        highlightElements(this.svg, everything);
        this.summaryPanel.hidden = false;
        this.summaryPanel.textContent = "";
        const heading = document.createElement("h2");
        heading.textContent = "All network patterns";
        this.summaryPanel.appendChild(heading);
        const list = document.createElement("ul");
        for (const [kind, count] of Object.entries(result.counts)) {
            const item = document.createElement("li");
            item.dataset.kind = kind;
            item.textContent = `${kindLabel(kind)}: ${count}`;
            list.appendChild(item);
        }
        this.summaryPanel.appendChild(list);
        const instances = document.createElement("div");
        instances.className = "topdown-instances";
        for (const inst of result.instances) {
            const chip = document.createElement("button");
            chip.className = "instance-entry";
            chip.dataset.instance = inst.key;
            chip.textContent = `${kindLabel(inst.kind)} (${inst.facts.nodes})`;
            chip.addEventListener("click", () => {
                this.state.selection = null;
                void this.explain(inst);
            });
            instances.appendChild(chip);
        }
        this.summaryPanel.appendChild(instances);
    }

    // -- hover/click on marks ---------------------------------------------------

    private handleMarkClick(event: MouseEvent): void {
        if (this.state.mode !== "top-down") return;
        const target = event.target as Element | null;
        const overlay = target?.closest<SVGElement>(".highlight");
        if (!overlay || !this.svg) return;
        const markId = overlay.dataset.for;
        const mark = this.svg.querySelector<SVGElement>(
            `g.marks [data-mark="${markId}"]`);
        const element = mark?.dataset.element;
        if (!element || !this.state.networkId) return;
        void this.track((async () => {
            const result = await this.api.getAllPatterns(this.state.networkId!);
            const inst = result.instances.find(
                (i) => i.nodes.includes(element) || i.links.includes(element));
            if (inst) {
                this.state.selection = null;
                await this.explain(inst);
            }
        })());
    }
}

export function mount(container: HTMLElement, baseUrl: string): App {
    return new App(container, baseUrl);
}

declare global {
    interface Window {
        motiflens?: App;
    }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
    const base = new URLSearchParams(location.search).get("api")
        ?? "http://127.0.0.1:8787/api/v1";
    window.motiflens = mount(document.getElementById("app")!, base);
}
