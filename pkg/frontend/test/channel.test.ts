import { describe, expect, it } from "vitest";

import { SessionChannel, type Transport } from "../src/channel.js";
import { applyServerMessage, initialViewModel, setConnected } from "../src/viewModel.js";

class StubTransport implements Transport {
  sent: string[] = [];
  private lineHandlers: ((line: string) => void)[] = [];
  private openHandlers: (() => void)[] = [];
  private closeHandlers: (() => void)[] = [];

  send(line: string): void { this.sent.push(line); }
  close(): void { this.emitClose(); }
  onLine(handler: (line: string) => void): void { this.lineHandlers.push(handler); }
  onOpen(handler: () => void): void { this.openHandlers.push(handler); }
  onClose(handler: () => void): void { this.closeHandlers.push(handler); }

  emitOpen(): void { for (const h of this.openHandlers) h(); }
  emitClose(): void { for (const h of this.closeHandlers) h(); }
  emitLine(line: string): void { for (const h of this.lineHandlers) h(line); }
}

function wiredUp() {
  const transport = new StubTransport();
  const channel = new SessionChannel(transport);
  const vm = initialViewModel();
  channel.onStateChange((connected) => setConnected(vm, connected));
  channel.onMessage((msg) => applyServerMessage(vm, msg));
  return { transport, channel, vm };
}

describe("session channel against a stub", () => {
  it("drops outbound messages while disconnected", () => {
    const { transport, channel } = wiredUp();
    expect(channel.send({ type: "tick", t: 1 })).toBe(false);
    expect(transport.sent).toEqual([]);
    transport.emitOpen();
    expect(channel.send({ type: "tick", t: 2 })).toBe(true);
    expect(transport.sent).toEqual(['{"type":"tick","t":2}']);
  });

  it("serializes pointer and gesture messages with normative field names", () => {
    const { transport, channel } = wiredUp();
    transport.emitOpen();
    channel.send({ type: "hello", profileId: "kid-1" });
    channel.send({ type: "start", activity: "laterality:right" });
    channel.send({ type: "pointer", u: 0.25, v: 0.75, t: 40 });
    channel.send({ type: "gesture", name: "RaiseRightArm", t: 90 });
    expect(transport.sent.map((line) => JSON.parse(line))).toEqual([
      { type: "hello", profileId: "kid-1" },
      { type: "start", activity: "laterality:right" },
      { type: "pointer", u: 0.25, v: 0.75, t: 40 },
      { type: "gesture", name: "RaiseRightArm", t: 90 },
    ]);
  });

  it("never synthesizes feedback or progress locally", () => {
    const { transport, channel, vm } = wiredUp();
    transport.emitOpen();
    channel.send({ type: "pointer", u: 0.5, v: 0.5, t: 10 });
    channel.send({ type: "gesture", name: "RaiseLeftArm", t: 60 });
    channel.send({ type: "tick", t: 200 });
    expect(vm.lastFeedback).toBeNull();
    expect(vm.progress).toBeNull();
    expect(vm.doneSummary).toBeNull();

    transport.emitLine('{"type":"feedback","kind":"Positive","modalities":["Audio"]}');
    expect(vm.lastFeedback?.kind).toBe("Positive");
    transport.emitLine('{"type":"progress","repetition":1,"errors":0}');
    expect(vm.progress).toEqual({ repetition: 1, errors: 0 });
  });

  it("ignores unparseable lines and unknown types", () => {
    const { transport, vm } = wiredUp();
    transport.emitOpen();
    transport.emitLine("{oops");
    transport.emitLine('{"type":"mystery"}');
    transport.emitLine("[]");
    expect(vm.lastError).toBeNull();
    expect(vm.elements).toEqual([]);
  });

  it("reflects disconnects in the view model", () => {
    const { transport, vm } = wiredUp();
    transport.emitOpen();
    expect(vm.connected).toBe(true);
    transport.emitClose();
    expect(vm.connected).toBe(false);
  });
});
