/** Typed client for the pattern explanation service. */

export type Viz = "node-link" | "matrix" | "time-arcs";

export interface NetworkSummary {
    nodes: number;
    links: number;
    directed: boolean;
    temporal: boolean;
}

export interface UploadResponse {
    id: string;
    summary: NetworkSummary;
}

export interface Mark {
    id: string;
    element: string;
    shape: "disc" | "rect" | "segment" | "arc";
    params: Record<string, number>;
    channels: { shade?: number; thickness?: number; type?: string };
}

export interface MarkGeometry {
    viz: Viz;
    canvas: { w: number; h: number };
    marks: Mark[];
}

export interface InstancePreview {
    key: string;
    kind: string;
    nodes: string[];
    links: string[];
    facts: { nodes: number; links: number; density: number };
}

export interface MiningResult {
    instances: InstancePreview[];
    counts: Record<string, number>;
}

export interface SelectorSummary {
    total: number;
    per_kind: [string, number][];
    message: string;
}

export type RegionKind = "rectangle" | "lasso";

export interface Region {
    kind: RegionKind;
    points: [number, number][];
}

export interface SelectionResponse {
    summary: SelectorSummary;
    mapping: "artifact" | "one-to-one" | "confuser";
    instances: InstancePreview[];
    selection: { nodes: string[]; links: string[] };
}

export interface Card {
    motif: string;
    viz: Viz;
    network_icon: string;
    network_text: string;
    facts_template: string;
    visual_pattern_name: string;
    visual_icon: string;
    visual_text: string;
    variation_icons: [string, string, string];
    variation_texts: [string, string, string];
}

export interface ExplanationResponse {
    card: Card;
    facts: Record<string, number | boolean | null>;
    facts_text: string;
    instance: InstancePreview;
    related: InstancePreview[];
}

export class ApiError extends Error {
    constructor(public status: number, public code: string, message: string) {
        super(message);
    }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
    const response = await fetch(url, init);
    const body = await response.json();
    if (!response.ok) {
        throw new ApiError(response.status, body.code ?? "unknown", body.message ?? "");
    }
    return body as T;
}

export class ApiClient {
    constructor(private base: string) {}

    uploadNetwork(data: string | Uint8Array, format: "json" | "csv" = "json"): Promise<UploadResponse> {
        return request(`${this.base}/networks?format=${format}`, {
            method: "POST",
            body: data as BodyInit,
        });
    }

    getView(networkId: string, viz: Viz): Promise<MarkGeometry> {
        return request(`${this.base}/networks/${networkId}/views/${viz}`);
    }

    postSelection(networkId: string, viz: Viz, region: Region): Promise<SelectionResponse> {
        return request(`${this.base}/networks/${networkId}/selection`, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ viz, region }),
        });
    }

    getAllPatterns(networkId: string): Promise<MiningResult> {
        return request(`${this.base}/networks/${networkId}/patterns`);
    }

    getExplanation(networkId: string, instanceKey: string, viz: Viz): Promise<ExplanationResponse> {
        return request(
            `${this.base}/networks/${networkId}/explanations/${instanceKey}?viz=${viz}`);
    }

    getCards(): Promise<Card[]> {
        return request(`${this.base}/repository/cards`);
    }
}
