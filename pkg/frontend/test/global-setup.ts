/** Spawns the pattern explanation service for the test run. */

import { spawn, type ChildProcess } from "node:child_process";
import type { TestProject } from "vitest/node";

let server: ChildProcess | undefined;

export default async function setup(project: TestProject): Promise<() => void> {
    const python = process.env.MOTIFLENS_PYTHON ?? "python3";
    server = spawn(python, ["-m", "motiflens.cli", "serve", "--port", "0"], {
        stdio: ["ignore", "pipe", "pipe"],
    });
    const port = await new Promise<number>((resolve, reject) => {
        const timer = setTimeout(
            () => reject(new Error("service did not announce a port")), 20000);
        let buffer = "";
        server!.stdout!.on("data", (chunk: Buffer) => {
            buffer += chunk.toString();
            const match = buffer.match(/http:\/\/[\d.]+:(\d+)\/api\/v1/);
            if (match) {
                clearTimeout(timer);
                resolve(Number(match[1]));
            }
        });
        server!.stderr!.on("data", (chunk: Buffer) => {
            buffer += chunk.toString();
        });
        server!.on("exit", (code) => {
            clearTimeout(timer);
            reject(new Error(`service exited early (${code}): ${buffer}`));
        });
    });
    project.provide("apiBase", `http://127.0.0.1:${port}/api/v1`);
    return () => {
        server?.kill();
    };
}

declare module "vitest" {
    export interface ProvidedContext {
        apiBase: string;
    }
}
