/** Application view state. */

import type { InstancePreview, SelectionResponse, Viz } from "./api.js";
import type { Tool } from "./selection.js";

export type Mode = "bottom-up" | "top-down";

export interface ViewState {
    networkId: string | null;
    temporal: boolean;
    viz: Viz;
    mode: Mode;
    tool: Tool;
    /** instances of the last selection (tab menu source) */
    selection: SelectionResponse | null;
    openPopup: "selector" | "explainer" | null;
    explained: InstancePreview | null;
    hoveredRelated: InstancePreview | null;
}

export function initialState(): ViewState {
    return {
        networkId: null,
        temporal: false,
        viz: "node-link",
        mode: "bottom-up",
        tool: "rectangle",
        selection: null,
        openPopup: null,
        explained: null,
        hoveredRelated: null,
    };
}
