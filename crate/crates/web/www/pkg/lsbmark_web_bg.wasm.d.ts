/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_attackscores_free: (a: number, b: number) => void;
export const __wbg_demo_free: (a: number, b: number) => void;
export const __wbg_embedstats_free: (a: number, b: number) => void;
export const __wbg_get_attackscores_mse: (a: number) => number;
export const __wbg_get_attackscores_nc: (a: number) => number;
export const __wbg_get_attackscores_psnr: (a: number) => number;
export const __wbg_get_attackscores_sc: (a: number) => number;
export const __wbg_get_embedstats_mse: (a: number) => number;
export const __wbg_get_embedstats_one_channel: (a: number) => number;
export const __wbg_get_embedstats_psnr: (a: number) => number;
export const __wbg_get_embedstats_three_channels: (a: number) => number;
export const __wbg_get_embedstats_two_channels: (a: number) => number;
export const __wbg_set_attackscores_mse: (a: number, b: number) => void;
export const __wbg_set_attackscores_nc: (a: number, b: number) => void;
export const __wbg_set_attackscores_psnr: (a: number, b: number) => void;
export const __wbg_set_attackscores_sc: (a: number, b: number) => void;
export const __wbg_set_embedstats_mse: (a: number, b: number) => void;
export const __wbg_set_embedstats_one_channel: (a: number, b: number) => void;
export const __wbg_set_embedstats_psnr: (a: number, b: number) => void;
export const __wbg_set_embedstats_three_channels: (a: number, b: number) => void;
export const __wbg_set_embedstats_two_channels: (a: number, b: number) => void;
export const demo_attack: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const demo_attacked_rgba: (a: number) => [number, number];
export const demo_cover_rgba: (a: number) => [number, number];
export const demo_diff_rgba: (a: number) => [number, number];
export const demo_embed_stats: (a: number) => number;
export const demo_extracted_rgba: (a: number) => [number, number];
export const demo_load_cover: (a: number, b: number, c: number, d: number) => [number, number];
export const demo_marked_rgba: (a: number) => [number, number];
export const demo_mask_rgba: (a: number) => [number, number];
export const demo_masked_watermark_rgba: (a: number) => [number, number];
export const demo_nc_curve: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
export const demo_new: (a: number, b: number) => [number, number, number];
export const demo_set_key_seed: (a: number, b: number) => [number, number];
export const demo_set_stable: (a: number, b: number) => [number, number];
export const demo_side: (a: number) => number;
export const demo_watermark_rgba: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
