/** Selector and explainer pop-ups.
 *
 * The selector lists the network patterns found in a selection (or the
 * artifact message). The explainer shows one chosen pattern through six
 * sections: a tab menu over the kinds in the selection, the network
 * pattern (icon + text), data facts, the visual pattern (icon + name +
 * text), three visual variations, and related instances elsewhere in
 * the network that highlight on hover.
 */

import type { ExplanationResponse, InstancePreview, SelectionResponse } from "./api.js";
import { iconSvg } from "./icons.js";

export interface PopupCallbacks {
    onExplain(instance: InstancePreview): void;
    onHoverRelated(instance: InstancePreview | null): void;
    onClose(): void;
}

function div(className: string, parent?: Element): HTMLDivElement {
    const node = document.createElement("div");
    node.className = className;
    parent?.appendChild(node);
    return node;
}

export function kindLabel(kind: string): string {
    return kind.replace(/-/g, " ");
}

export class PopupHost {
    private root: HTMLElement;

    constructor(container: HTMLElement) {
        this.root = div("popup-host");
        container.appendChild(this.root);
        document.addEventListener("keydown", (event) => {
            if (event.key === "Escape") this.close();
        });
    }

    close(): void {
        this.root.textContent = "";
    }

    get open(): boolean {
        return this.root.childElementCount > 0;
    }

    /** Selector pop-up: summary message plus one entry per instance. */
    showSelector(response: SelectionResponse, callbacks: PopupCallbacks): void {
        this.close();
        const popup = div("popup selector-popup", this.root);
        popup.dataset.popup = "selector";
        const message = document.createElement("p");
        message.className = "selector-message";
        message.textContent = response.summary.message;
        popup.appendChild(message);
        if (response.instances.length > 0) {
            const list = div("selector-instances", popup);
            for (const inst of response.instances) {
                const entry = document.createElement("button");
                entry.className = "instance-entry";
                entry.dataset.instance = inst.key;
                entry.dataset.kind = inst.kind;
                entry.textContent =
                    `${kindLabel(inst.kind)} (${inst.facts.nodes} nodes, ${inst.facts.links} links)`;
                entry.addEventListener("click", () => callbacks.onExplain(inst));
                list.appendChild(entry);
            }
        }
        this.addCloseButton(popup, callbacks);
    }

    /** Explainer pop-up with its six sections. */
    showExplainer(explanation: ExplanationResponse, selection: InstancePreview[],
                  callbacks: PopupCallbacks): void {
        this.close();
        const popup = div("popup explainer-popup", this.root);
        popup.dataset.popup = "explainer";

        const tabs = div("section tab-menu", popup);
        tabs.dataset.section = "tab-menu";
        const kinds: string[] = [];
        for (const inst of selection) {
            if (!kinds.includes(inst.kind)) kinds.push(inst.kind);
        }
        if (kinds.length === 0) kinds.push(explanation.instance.kind);
        for (const kind of kinds) {
            const tab = document.createElement("button");
            tab.className = "tab";
            tab.dataset.kind = kind;
            tab.textContent = kindLabel(kind);
            if (kind === explanation.instance.kind) tab.classList.add("active");
            tab.addEventListener("click", () => {
                const target = selection.find((i) => i.kind === kind);
                if (target && target.key !== explanation.instance.key) {
                    callbacks.onExplain(target);
                }
            });
            tabs.appendChild(tab);
        }

        const network = div("section network-pattern", popup);
        network.dataset.section = "network-pattern";
        network.innerHTML =
            `<div class="icon net-icon">${iconSvg(explanation.card.network_icon)}</div>` +
            `<p>${escapeHtml(explanation.card.network_text)}</p>`;

        const facts = div("section data-facts", popup);
        facts.dataset.section = "data-facts";
        facts.innerHTML = `<p>${escapeHtml(explanation.facts_text)}</p>`;

        const visual = div("section visual-pattern", popup);
        visual.dataset.section = "visual-pattern";
        visual.innerHTML =
            `<div class="icon visual-icon">${iconSvg(explanation.card.visual_icon)}</div>` +
            `<h3 class="visual-name">${escapeHtml(explanation.card.visual_pattern_name)}</h3>` +
            `<p>${escapeHtml(explanation.card.visual_text)}</p>`;

        const variations = div("section variations", popup);
        variations.dataset.section = "variations";
        explanation.card.variation_icons.forEach((icon, i) => {
            const fig = document.createElement("figure");
            fig.innerHTML = `${iconSvg(icon, 56)}<figcaption>` +
                `${escapeHtml(explanation.card.variation_texts[i])}</figcaption>`;
            variations.appendChild(fig);
        });

        const related = div("section related-instances", popup);
        related.dataset.section = "related-instances";
        if (explanation.related.length === 0) {
            related.innerHTML = `<p class="none">No other instances of this pattern.</p>`;
        } else {
            for (const inst of explanation.related) {
                const row = document.createElement("button");
                row.className = "related-entry";
                row.dataset.instance = inst.key;
                row.textContent = `${kindLabel(inst.kind)} with ${inst.facts.nodes} nodes`;
                row.addEventListener("mouseenter", () => callbacks.onHoverRelated(inst));
                row.addEventListener("mouseleave", () => callbacks.onHoverRelated(null));
                row.addEventListener("click", () => callbacks.onExplain(inst));
                related.appendChild(row);
            }
        }
        this.addCloseButton(popup, callbacks);
    }

    showNotice(text: string): void {
        this.close();
        const popup = div("popup notice-popup", this.root);
        popup.dataset.popup = "notice";
        const message = document.createElement("p");
        message.textContent = text;
        popup.appendChild(message);
    }

    private addCloseButton(popup: HTMLElement, callbacks: PopupCallbacks): void {
        const button = document.createElement("button");
        button.className = "close-popup";
        button.textContent = "×";
        button.addEventListener("click", () => {
            this.close();
            callbacks.onClose();
        });
        popup.prepend(button);
    }
}

function escapeHtml(text: string): string {
    return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}
