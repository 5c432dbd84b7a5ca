/** Highlight overlays: clones of marks for a set of element ids. */

export function clearHighlights(svg: SVGSVGElement, cls = "highlight"): void {
    const layer = svg.querySelector("g.overlays");
    if (!layer) return;
    for (const node of Array.from(layer.querySelectorAll(`.${cls}`))) {
        node.remove();
    }
}

/**
 * Overlay the marks of the given elements. Every overlay references the
 * mark it shadows via data-for, which always names a mark id present in
 * the current geometry.
 */
export function highlightElements(svg: SVGSVGElement, elementIds: Iterable<string>,
                                  cls = "highlight"): SVGElement[] {
    const wanted = new Set(elementIds);
    const layer = svg.querySelector("g.overlays")!;
    const out: SVGElement[] = [];
    for (const mark of Array.from(svg.querySelectorAll<SVGElement>("g.marks .mark"))) {
        if (!wanted.has(mark.dataset.element ?? "")) continue;
        const clone = mark.cloneNode(false) as SVGElement;
        clone.classList.add(cls);
        clone.removeAttribute("data-kind");
        clone.dataset.for = mark.dataset.mark;
        layer.appendChild(clone);
        out.push(clone);
    }
    return out;
}

/** Dim everything except the given elements (used for selected instances). */
export function focusElements(svg: SVGSVGElement, elementIds: Iterable<string>): void {
    const wanted = new Set(elementIds);
    for (const mark of Array.from(svg.querySelectorAll<SVGElement>("g.marks .mark"))) {
        mark.classList.toggle("dimmed", wanted.size > 0 &&
            !wanted.has(mark.dataset.element ?? ""));
    }
}
