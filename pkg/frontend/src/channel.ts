// Message channel to the session service. The transport is injectable so the
// whole UI can run against a stub in tests; the default is a browser
// WebSocket to /session. Outbound messages are dropped while disconnected.

import type { ClientMessage, ServerMessage } from "./protocol.js";
import { parseServerMessage } from "./protocol.js";

export interface Transport {
  send(line: string): void;
  close(): void;
  onLine(handler: (line: string) => void): void;
  onOpen(handler: () => void): void;
  onClose(handler: () => void): void;
}

export class SessionChannel {
  private transport: Transport;
  private connected = false;
  private messageHandlers: ((msg: ServerMessage) => void)[] = [];
  private stateHandlers: ((connected: boolean) => void)[] = [];

  constructor(transport: Transport) {
    this.transport = transport;
    transport.onOpen(() => this.setConnected(true));
    transport.onClose(() => this.setConnected(false));
    transport.onLine((line) => {
      const msg = parseServerMessage(line);
      if (msg) {
        for (const handler of this.messageHandlers) handler(msg);
      }
    });
  }

  private setConnected(connected: boolean): void {
    this.connected = connected;
    for (const handler of this.stateHandlers) handler(connected);
  }

  get isConnected(): boolean {
    return this.connected;
  }

  onMessage(handler: (msg: ServerMessage) => void): void {
    this.messageHandlers.push(handler);
  }

  onStateChange(handler: (connected: boolean) => void): void {
    this.stateHandlers.push(handler);
  }

  send(message: ClientMessage): boolean {
    if (!this.connected) return false;
    this.transport.send(JSON.stringify(message));
    return true;
  }

  close(): void {
    this.transport.close();
  }
}

export function webSocketTransport(url: string): Transport {
  const socket = new WebSocket(url);
  return {
    send: (line) => socket.send(line),
    close: () => socket.close(),
    onLine: (handler) => socket.addEventListener("message", (ev) => handler(String(ev.data))),
    onOpen: (handler) => socket.addEventListener("open", handler),
    onClose: (handler) => socket.addEventListener("close", handler),
  };
}
