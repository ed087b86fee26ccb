import { execFileSync } from "node:child_process";

export interface BoundTokenizerOptions {
  /** Command invoking the core CLI, e.g. ["python3", "-m", "silabi.cli"]. Overrides SILABI_CLI. */
  cli?: readonly string[];
  /** Inventory override file, passed through as --inventory. */
  inventory?: string;
  /** Out-of-alphabet handling, passed through as --unknown. */
  unknown?: "remove" | "mark";
}

export interface BoundVocab {
  /** Token text by id; row order of `silabi inspect-vocab`. */
  tokens: readonly string[];
  /** Reverse map, token text to id. */
  ids: ReadonlyMap<string, number>;
}

// Ids 0..3 are <pad> <unk> <bos> <eos>; pad/bos/eos are dropped on decode.
const PAD_ID = 0;
const BOS_ID = 2;
const EOS_ID = 3;

const WORD_SEPARATOR = " | ";

function resolveCli(options: BoundTokenizerOptions): string[] {
  if (options.cli && options.cli.length > 0) return [...options.cli];
  const env = process.env.SILABI_CLI;
  if (env && env.trim().length > 0) return env.trim().split(/\s+/);
  return ["silabi"];
}

// One output line is words joined by " | ", tokens within a word by " ".
function parseWords(line: string): string[][] {
  if (line === "") return [];
  return line.split(WORD_SEPARATOR).map((word) => word.split(" "));
}

/**
 * Handle to the core tokenizer. Construction shells out once to load the
 * vocabulary; every tokenize/encode call delegates to a fresh CLI process,
 * so instances are immutable and safe to share. Requires the `silabi`
 * command on PATH (or set SILABI_CLI / the cli option).
 */
export class BoundTokenizer {
  private readonly argv: readonly string[];
  private readonly passthrough: readonly string[];
  private readonly vocab: BoundVocab;

  constructor(options: BoundTokenizerOptions = {}) {
    this.argv = resolveCli(options);
    const passthrough: string[] = [];
    if (options.inventory) passthrough.push("--inventory", options.inventory);
    if (options.unknown) passthrough.push("--unknown", options.unknown);
    this.passthrough = passthrough;

    const rows = this.run(["inspect-vocab"]).split("\n");
    if (rows[rows.length - 1] === "") rows.pop();
    const ids = new Map<string, number>();
    rows.forEach((token, id) => ids.set(token, id));
    this.vocab = { tokens: rows, ids };
  }

  /** Segment text into syllable token texts, in order. */
  boundTokenize(text: string): string[] {
    return this.words("tokenize", [], text).flat();
  }

  /** Segment text and return token ids, in order. */
  boundEncode(text: string): number[] {
    return this.words("tokenize", ["--ids"], text)
      .flat()
      .map(Number);
  }

  /** Word-boundary flags aligned with boundEncode's ids; feeds boundDecode. */
  wordInitial(text: string): boolean[] {
    return this.words("tokenize", [], text).flatMap((word) =>
      word.map((_, i) => i === 0),
    );
  }

  /**
   * Rebuild text from ids. Flag-marked tokens open a new space-separated
   * word; without flags everything joins as one word. Pad/bos/eos ids are
   * skipped; the unk id decodes to its literal token text.
   */
  boundDecode(ids: readonly number[], wordInitial?: readonly boolean[]): string {
    const flags = wordInitial ?? ids.map(() => false);
    if (flags.length !== ids.length) {
      throw new Error(`${ids.length} ids but ${flags.length} word_initial flags`);
    }
    const parts: string[] = [];
    for (let i = 0; i < ids.length; i++) {
      const text = this.tokenOf(ids[i]);
      if (ids[i] === PAD_ID || ids[i] === BOS_ID || ids[i] === EOS_ID) continue;
      if (flags[i] && parts.length > 0) parts.push(" ");
      parts.push(text);
    }
    return parts.join("");
  }

  /** The loaded token/id table. */
  boundVocab(): BoundVocab {
    return this.vocab;
  }

  private tokenOf(id: number): string {
    if (!Number.isInteger(id) || id < 0 || id >= this.vocab.tokens.length) {
      throw new Error(`id ${id} outside vocabulary of size ${this.vocab.tokens.length}`);
    }
    return this.vocab.tokens[id];
  }

  private words(subcommand: string, args: string[], text: string): string[][] {
    if (text.length === 0) return [];
    const input = text.endsWith("\n") ? text : text + "\n";
    const lines = this.run([subcommand, ...args], input).split("\n");
    if (lines[lines.length - 1] === "") lines.pop();
    return lines.flatMap(parseWords);
  }

  private run(args: string[], input = ""): string {
    const [command, ...prefix] = this.argv;
    try {
      return execFileSync(command, [...prefix, ...args, ...this.passthrough], {
        input,
        encoding: "utf8",
        stdio: ["pipe", "pipe", "pipe"],
      });
    } catch (error) {
      const stderr = (error as { stderr?: string }).stderr;
      if (stderr && stderr.trim().length > 0) {
        throw new Error(stderr.trim());
      }
      throw error;
    }
  }
}
