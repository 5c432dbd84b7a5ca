/** Small built-in demo networks, uploaded through the regular api. */

function json(doc: unknown): string {
    return JSON.stringify(doc);
}

const clubDemo = {
    directed: false,
     temporal: false,
    nodes: [
        ...Array.from({ length: 5 }, (_, i) => ({ id: `core${i}`, label: `Core ${i}` })),
        ...Array.from({ length: 4 }, (_, i) => ({ id: `fanleaf${i}`, label: `Guest ${i}` })),
        { id: "bridge", label: "Bridge" },
        ...Array.from({ length: 5 }, (_, i) => ({ id: `side${i}`, label: `Side ${i}` })),
        { id: "loner", label: "Loner" },
    ],
    links: [
        // complete core block
        ...[...Array(5).keys()].flatMap((i) =>
            [...Array(5).keys()].filter((j) => j > i).map((j) => ({
                id: `c${i}${j}`, source: `core${i}`, target: `core${j}`,
                weight: 1 + ((i + j) % 3), type: "friend",
            }))),
        // a fan off core0
        ...[...Array(4).keys()].map((i) => ({
            id: `f${i}`, source: "core0", target: `fanleaf${i}`, weight: 1, type: "guest",
        })),
        // bridge into a second group
        { id: "b0", source: "core4", target: "bridge", weight: 2, type: "friend" },
        { id: "b1", source: "bridge", target: "side0", weight: 2, type: "friend" },
        ...[...Array(4).keys()].map((i) => ({
            id: `s${i}`, source: `side${i}`, target: `side${i + 1}`, weight: 1, type: "friend",
        })),
        { id: "heavy", source: "core1", target: "core2", weight: 9, type: "rival" },
    ],
};

const tradeDemo = {
    directed: true,
    temporal: true,
    nodes: [
        ...["alder", "birch", "cedar", "dogwood", "elm", "fir"].map((n) => ({
            id: n, label: n[0].toUpperCase() + n.slice(1),
        })),
    ],
    links: [
        { id: "t0", source: "alder", target: "birch", weight: 3, type: "trade", time: 1651 },
        { id: "t1", source: "birch", target: "alder", weight: 2, type: "trade", time: 1652 },
        { id: "t2", source: "alder", target: "cedar", weight: 1, type: "letter", time: 1652 },
        { id: "t3", source: "alder", target: "cedar", weight: 1, type: "letter", time: 1654 },
        { id: "t4", source: "alder", target: "cedar", weight: 2, type: "trade", time: 1656 },
        { id: "t5", source: "dogwood", target: "elm", weight: 1, type: "trade", time: 1653 },
        { id: "t6", source: "elm", target: "fir", weight: 1, type: "trade", time: 1655 },
        { id: "t7", source: "cedar", target: "dogwood", weight: 4, type: "credit", time: 1654 },
        { id: "t8", source: "fir", target: "alder", weight: 1, type: "letter", time: 1656 },
    ],
};

export const SAMPLE_NETWORKS: Record<string, string> = {
    "club (node-link & matrix demo)": json(clubDemo),
    "trade (time-arcs demo)": json(tradeDemo),
};
