/* tslint:disable */
/* eslint-disable */

export class AttackScores {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    mse: number;
    nc: number;
    psnr: number;
    sc: number;
}

export class Demo {
    free(): void;
    [Symbol.dispose](): void;
    /**
     * `kind` is one of crop, jpeg, blur, saltpepper.
     */
    attack(kind: string, strength: number, seed: number): AttackScores;
    attacked_rgba(): Uint8Array;
    cover_rgba(): Uint8Array;
    diff_rgba(): Uint8Array;
    embed_stats(): EmbedStats;
    extracted_rgba(): Uint8Array;
    /**
     * Replace the cover with an uploaded PNG/BMP/JPEG file.
     */
    load_cover(bytes: Uint8Array, key_seed: number): void;
    marked_rgba(): Uint8Array;
    mask_rgba(): Uint8Array;
    masked_watermark_rgba(): Uint8Array;
    nc_curve(kind: string, strengths: Float64Array, seeds: number): Float64Array;
    constructor(side: number, key_seed: number);
    set_key_seed(seed: number): void;
    set_stable(stable: boolean): void;
    side(): number;
    watermark_rgba(): Uint8Array;
}

export class EmbedStats {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    mse: number;
    one_channel: number;
    psnr: number;
    three_channels: number;
    two_channels: number;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_attackscores_free: (a: number, b: number) => void;
    readonly __wbg_demo_free: (a: number, b: number) => void;
    readonly __wbg_embedstats_free: (a: number, b: number) => void;
    readonly __wbg_get_attackscores_mse: (a: number) => number;
    readonly __wbg_get_attackscores_nc: (a: number) => number;
    readonly __wbg_get_attackscores_psnr: (a: number) => number;
    readonly __wbg_get_attackscores_sc: (a: number) => number;
    readonly __wbg_get_embedstats_mse: (a: number) => number;
    readonly __wbg_get_embedstats_one_channel: (a: number) => number;
    readonly __wbg_get_embedstats_psnr: (a: number) => number;
    readonly __wbg_get_embedstats_three_channels: (a: number) => number;
    readonly __wbg_get_embedstats_two_channels: (a: number) => number;
    readonly __wbg_set_attackscores_mse: (a: number, b: number) => void;
    readonly __wbg_set_attackscores_nc: (a: number, b: number) => void;
    readonly __wbg_set_attackscores_psnr: (a: number, b: number) => void;
    readonly __wbg_set_attackscores_sc: (a: number, b: number) => void;
    readonly __wbg_set_embedstats_mse: (a: number, b: number) => void;
    readonly __wbg_set_embedstats_one_channel: (a: number, b: number) => void;
    readonly __wbg_set_embedstats_psnr: (a: number, b: number) => void;
    readonly __wbg_set_embedstats_three_channels: (a: number, b: number) => void;
    readonly __wbg_set_embedstats_two_channels: (a: number, b: number) => void;
    readonly demo_attack: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly demo_attacked_rgba: (a: number) => [number, number];
    readonly demo_cover_rgba: (a: number) => [number, number];
    readonly demo_diff_rgba: (a: number) => [number, number];
    readonly demo_embed_stats: (a: number) => number;
    readonly demo_extracted_rgba: (a: number) => [number, number];
    readonly demo_load_cover: (a: number, b: number, c: number, d: number) => [number, number];
    readonly demo_marked_rgba: (a: number) => [number, number];
    readonly demo_mask_rgba: (a: number) => [number, number];
    readonly demo_masked_watermark_rgba: (a: number) => [number, number];
    readonly demo_nc_curve: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly demo_new: (a: number, b: number) => [number, number, number];
    readonly demo_set_key_seed: (a: number, b: number) => [number, number];
    readonly demo_set_stable: (a: number, b: number) => [number, number];
    readonly demo_side: (a: number) => number;
    readonly demo_watermark_rgba: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
