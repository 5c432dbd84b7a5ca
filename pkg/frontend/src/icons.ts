/**
 * Static vector assets, addressed by the engine's asset keys:
 * net/<motif>, <viz>/<motif>, <viz>/<motif>-v1..3. Variations re-render
 * the lead glyph scaled, stretched, or tilted.
 */

const INK = "#222831";
const ACCENT = "#2c7fb8";
const FAINT = "#b9bfc6";

type Pt = [number, number];

function dots(pts: Pt[], r = 4.5, fill = INK): string {
    return pts.map(([x, y]) => `<circle cx="${x}" cy="${y}" r="${r}" fill="${fill}"/>`).join("");
}

function lines(pairs: [Pt, Pt][], w = 1.8, color = INK): string {
    return pairs.map(([[x1, y1], [x2, y2]]) =>
        `<line x1="${x1}" y1="${y1}" x2="${x2}" y2="${y2}" stroke="${color}" ` +
        `stroke-width="${w}" stroke-linecap="round"/>`).join("");
}

function ring(cx: number, cy: number, radius: number, n: number, start = 0): Pt[] {
    return Array.from({ length: n }, (_, i) => {
        const a = start + (2 * Math.PI * i) / n;
        return [cx + radius * Math.cos(a), cy + radius * Math.sin(a)] as Pt;
    });
}

function arc(x: number, y1: number, y2: number, color = INK, w = 2, sweep = 0): string {
    const r = Math.abs(y2 - y1) / 2;
    return `<path d="M ${x} ${y1} A ${r} ${r} 0 0 ${sweep} ${x} ${y2}" fill="none" ` +
        `stroke="${color}" stroke-width="${w}"/>`;
}

function loop(x: number, y: number, r = 7, color = INK, w = 2): string {
    return `<circle cx="${x}" cy="${y}" r="${r}" fill="none" stroke="${color}" stroke-width="${w}"/>`;
}

function graphForm(motif: string, ink: string, accent: string): string {
    switch (motif) {
        case "strong-link":
            return lines([[[20, 22], [80, 20]], [[82, 78], [25, 80]]], 1.2, FAINT) +
                lines([[[28, 62], [74, 38]]], 6, accent) +
                dots([[20, 22], [80, 20], [82, 78], [25, 80]], 3.5, FAINT) +
                dots([[28, 62], [74, 38]], 4.5, ink);
        case "self-link":
            return loop(62, 38, 9, accent, 2.5) + lines([[[30, 70], [55, 45]]], 1.5, ink) +
                dots([[55, 45]], 5, ink) + dots([[30, 70]], 3.5, FAINT);
        case "parallel-links":
            return lines([[[25, 54], [75, 38]]], 2.5, accent) +
                lines([[[25, 62], [75, 46]]], 2.5, ink) +
                dots([[25, 58], [75, 42]], 4.5, ink);
        case "isolated-node":
            return dots([[72, 30]], 5.5, accent) +
                lines([[[25, 62], [38, 75]], [[38, 75], [22, 80]]], 1.2, FAINT) +
                dots([[25, 62], [38, 75], [22, 80]], 3.5, FAINT);
        case "hub": {
            const leaves = ring(50, 50, 32, 8, 0.3);
            return lines(leaves.map((p) => [[50, 50], p] as [Pt, Pt]), 1.6, ink) +
                dots(leaves, 3.5, ink) + dots([[50, 50]], 6.5, accent);
        }
        case "bridge-node": {
            const left = ring(27, 38, 14, 3, 0.5);
            const right = ring(73, 64, 14, 3, 1.2);
            const tri = (g: Pt[]) => lines([[g[0], g[1]], [g[1], g[2]], [g[2], g[0]]], 1.6, ink);
            return tri(left) + tri(right) +
                lines([[left[0], [50, 50]], [right[0], [50, 50]]], 1.8, ink) +
                dots([...left, ...right], 4, ink) + dots([[50, 50]], 6, accent);
        }
        case "fan": {
            const leaves: Pt[] = [[70, 26], [78, 44], [80, 62], [72, 80]];
            return lines(leaves.map((p) => [[38, 58], p] as [Pt, Pt]), 1.6, ink) +
                dots(leaves, 4, ink) + dots([[38, 58]], 6, accent);
        }
        case "chain": {
            const pts: Pt[] = [[14, 70], [32, 56], [50, 62], [68, 48], [86, 34]];
            return lines(pts.slice(1).map((p, i) => [pts[i], p] as [Pt, Pt]), 2, ink) +
                dots(pts, 4.5, ink);
        }
        case "clique": {
            const pts = ring(50, 52, 28, 5, -Math.PI / 2);
            const pairs: [Pt, Pt][] = [];
            for (let i = 0; i < 5; i++) for (let j = i + 1; j < 5; j++) pairs.push([pts[i], pts[j]]);
            return lines(pairs, 1.5, ink) + dots(pts, 4.5, ink);
        }
        case "cluster": {
            const pts = [...ring(50, 52, 26, 6, 0.2), [50, 52] as Pt];
            const linked = [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0], [0, 6],
                [2, 6], [3, 6], [5, 6], [1, 3], [0, 2]];
            return lines(linked.map(([i, j]) => [pts[i], pts[j]] as [Pt, Pt]), 1.4, ink) +
                dots(pts, 4.2, ink);
        }
        case "biclique": {
            const left: Pt[] = [[28, 30], [28, 50], [28, 70]];
            const right: Pt[] = [[72, 40], [72, 60]];
            const pairs: [Pt, Pt][] = [];
            for (const a of left) for (const b of right) pairs.push([a, b]);
            return lines(pairs, 1.5, ink) + dots(left, 4.5, ink) + dots(right, 4.5, accent);
        }
        case "reciprocal-link":
            return `<path d="M 30 44 Q 50 28 70 44" fill="none" stroke="${ink}" stroke-width="2.2"/>` +
                `<path d="M 70 56 Q 50 72 30 56" fill="none" stroke="${accent}" stroke-width="2.2"/>` +
                dots([[27, 50], [73, 50]], 5, ink);
        case "recurring-link":
            return [1.4, 2.0, 2.8].map((w, k) => {
                const y = 34 + k * 16;
                return `<path d="M 28 ${y + 8} Q 50 ${y - 10} 72 ${y + 8}" fill="none" ` +
                    `stroke="${ink}" stroke-width="${w}"/>` + dots([[28, y + 8], [72, y + 8]], 3.5, ink);
            }).join("");
        default:
            return dots([[50, 50]], 6, ink);
    }
}

const GRID = 7;

const MATRIX_CELLS: Record<string, [number, number, number][]> = {
    "strong-link": [[1, 4, 1], [4, 1, 1], [2, 6, 0.3], [6, 2, 0.3], [5, 3, 0.3], [3, 5, 0.3]],
    "self-link": [[3, 3, 1], [1, 5, 0.3], [5, 1, 0.3]],
    "parallel-links": [[2, 5, 1], [5, 2, 1]],
    "isolated-node": [[1, 2, 0.5], [2, 1, 0.5], [5, 6, 0.5], [6, 5, 0.5],
        [1, 6, 0.5], [6, 1, 0.5], [2, 6, 0.5], [6, 2, 0.5]],
    hub: Array.from({ length: GRID }, (_, c) => [3, c, 0.8] as [number, number, number])
        .concat(Array.from({ length: GRID }, (_, r) => [r, 3, 0.8] as [number, number, number]))
        .filter(([r, c]) => r !== c),
    "bridge-node": [[3, 0, 0.8], [3, 1, 0.8], [0, 3, 0.8], [1, 3, 0.8], [3, 5, 0.8],
        [3, 6, 0.8], [5, 3, 0.8], [6, 3, 0.8], [0, 1, 0.4], [1, 0, 0.4], [5, 6, 0.4], [6, 5, 0.4]],
    fan: [[2, 3, 0.8], [2, 4, 0.8], [2, 5, 0.8], [3, 2, 0.8], [4, 2, 0.8], [5, 2, 0.8]],
    chain: [[0, 1, 0.8], [1, 0, 0.8], [1, 2, 0.8], [2, 1, 0.8], [2, 3, 0.8], [3, 2, 0.8],
        [3, 4, 0.8], [4, 3, 0.8], [4, 5, 0.8], [5, 4, 0.8]],
    clique: Array.from({ length: 16 }, (_, k) => [1 + Math.floor(k / 4), 1 + (k % 4), 0.85] as
        [number, number, number]).filter(([r, c]) => r !== c),
    cluster: Array.from({ length: 25 }, (_, k) => [1 + Math.floor(k / 5), 1 + (k % 5), 0.7] as
        [number, number, number]).filter(([r, c]) => r !== c && (r + c) % 3 !== 0),
    biclique: ([[0, 4], [0, 5], [0, 6], [1, 4], [1, 5], [1, 6]] as [number, number][])
        .flatMap(([r, c]) => [[r, c, 0.8], [c, r, 0.8]] as [number, number, number][]),
};

function matrixForm(motif: string, variant: number): string {
    let cells = MATRIX_CELLS[motif] ?? [];
    const clamp = (v: number) => Math.max(0, Math.min(GRID - 1, v));
    if (variant === 1) cells = cells.map(([r, c, s]) => [clamp(r - 1), clamp(c - 1), s]);
    if (variant === 2) cells = cells.map(([r, c, s]) => [clamp(r + 1), clamp(c + 2), s]);
    if (variant === 3) {
        const half = Math.floor(cells.length / 2);
        cells = cells.slice(0, half).concat(
            cells.slice(half).map(([r, c, s]) => [clamp(r + 2), clamp(c + 1), s]));
    }
    const step = 84 / GRID;
    let body = `<rect x="8" y="8" width="84" height="84" fill="none" stroke="${FAINT}"/>`;
    for (let k = 1; k < GRID; k++) {
        const p = 8 + k * step;
        body += `<line x1="${p}" y1="8" x2="${p}" y2="92" stroke="${FAINT}" stroke-width="0.5"/>` +
            `<line x1="8" y1="${p}" x2="92" y2="${p}" stroke="${FAINT}" stroke-width="0.5"/>`;
    }
    const seen = new Set<string>();
    for (const [r, c, s] of cells) {
        const key = `${r},${c}`;
        if (seen.has(key)) continue;
        seen.add(key);
        body += `<rect x="${8 + c * step}" y="${8 + r * step}" width="${step}" height="${step}" ` +
            `fill="${INK}" fill-opacity="${0.25 + 0.75 * s}"/>`;
    }
    return body;
}

function timeArcForm(motif: string): string {
    const rows = [24, 42, 60, 78];
    let body = rows.map((y) =>
        `<line x1="10" y1="${y}" x2="90" y2="${y}" stroke="${FAINT}" stroke-width="0.8"/>`).join("");
    const event = (x: number, r1: number, r2: number, w = 1.8, color = INK, sweep = 0) => {
        body += dots([[x, rows[r1]]], 3);
        if (r1 !== r2) {
            body += dots([[x, rows[r2]]], 3) + arc(x, rows[r1], rows[r2], color, w, sweep);
        } else {
            body += loop(x, rows[r1] - 7, 5, color, w);
        }
    };
    switch (motif) {
        case "strong-link": event(30, 0, 2, 1.2, FAINT); event(50, 0, 3, 4.5, ACCENT); event(70, 1, 2, 1.2, FAINT); break;
        case "self-link": event(50, 2, 2, 2.2, ACCENT); event(28, 0, 1, 1.2, FAINT); break;
        case "parallel-links": event(50, 0, 2, 2.2, INK); body += arc(50, rows[0] + 4, rows[2] - 4, ACCENT, 2.2); break;
        case "isolated-node": event(30, 0, 1, 1.4); event(55, 0, 3, 1.4); event(75, 3, 0, 1.4); break;
        case "hub": [[25, 1], [42, 2], [60, 3], [78, 2]].forEach(([x, o]) => event(x, 0, o)); break;
        case "bridge-node": event(32, 1, 0, 1.6); event(48, 1, 2, 2, ACCENT); event(66, 2, 3, 1.6); break;
        case "fan": [[40, 1], [50, 2], [60, 3]].forEach(([x, o]) => event(x, 0, o, 1.6)); break;
        case "chain": event(30, 0, 1); event(50, 1, 2); event(70, 2, 3); break;
        case "clique":
            [[35, 0, 1], [45, 1, 2], [55, 0, 2], [65, 1, 3], [75, 2, 3], [85, 0, 3]]
                .forEach(([x, a, b]) => event(x, a, b, 1.6));
            break;
        case "cluster":
            [[30, 0, 1], [38, 1, 2], [46, 0, 2], [54, 1, 2], [62, 0, 1], [70, 1, 2]]
                .forEach(([x, a, b]) => event(x, a, b, 1.4));
            break;
        case "biclique":
            [[35, 0, 2], [45, 0, 3], [60, 1, 2], [70, 1, 3]].forEach(([x, a, b]) => event(x, a, b, 1.6));
            break;
        case "reciprocal-link":
            body += arc(50, rows[1], rows[2], INK, 2.2, 0) + arc(50, rows[1], rows[2], ACCENT, 2.2, 1) +
                dots([[50, rows[1]], [50, rows[2]]], 3);
            break;
        case "recurring-link": [30, 50, 70].forEach((x) => event(x, 1, 2, 1.8, ACCENT)); break;
    }
    return body;
}

const VARIANT_TRANSFORM: Record<number, string> = {
    1: "translate(14,14) scale(0.72)",
    2: "translate(-11,10) scale(1.22,0.8)",
    3: "translate(50,50) rotate(18) translate(-50,-50) scale(0.92) translate(4,4)",
};

/** Render an asset key to an SVG string (square, 100x100 viewBox). */
export function iconSvg(key: string, size = 84): string {
    const slash = key.indexOf("/");
    const family = key.slice(0, slash);
    let motif = key.slice(slash + 1);
    let variant = 0;
    const vm = motif.match(/^(.*)-v([123])$/);
    if (vm) {
        motif = vm[1];
        variant = Number(vm[2]);
    }
    let body: string;
    let bg: string;
    if (family === "net") {
        body = graphForm(motif, "#f5f5f5", "#7fd4ff");
        bg = "#18181c";
    } else {
        bg = "#ffffff";
        if (family === "matrix") body = matrixForm(motif, variant);
        else if (family === "time-arcs") body = timeArcForm(motif);
        else body = graphForm(motif, INK, ACCENT);
        if (variant && family !== "matrix") {
            body = `<g transform="${VARIANT_TRANSFORM[variant]}">${body}</g>`;
        }
    }
    return `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 100 100" ` +
        `width="${size}" height="${size}" role="img">` +
        `<rect width="100" height="100" rx="8" fill="${bg}"/>${body}</svg>`;
}
