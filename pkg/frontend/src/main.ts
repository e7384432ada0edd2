// Wire-up: teacher console on the left, live activity stage on the right.

import { SessionChannel, webSocketTransport } from "./channel.js";
import { ProfileApi, profileRows } from "./console.js";
import type { ProfileRecord } from "./console.js";
import { InputEmitter } from "./input.js";
import { CanvasPainter } from "./canvas.js";
import { renderScene } from "./render.js";
import {
  applyServerMessage,
  initialViewModel,
  setConnected,
  trackLocalPointer,
} from "./viewModel.js";

const TICK_INTERVAL_MS = 250;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

async function refreshProfiles(api: ProfileApi, select: HTMLSelectElement,
                               table: HTMLTableSectionElement): Promise<void> {
  const profiles = await api.list();
  select.innerHTML = "";
  table.innerHTML = "";
  for (const row of profileRows(profiles)) {
    const option = document.createElement("option");
    option.value = row.id;
    option.textContent = `${row.name} (${row.disability})`;
    select.appendChild(option);

    const tr = document.createElement("tr");
    for (const cell of [row.id, row.name, String(row.age), row.disability,
                        row.laterality, row.posture, row.arms]) {
      const td = document.createElement("td");
      td.textContent = cell;
      tr.appendChild(td);
    }
    const remove = document.createElement("button");
    remove.textContent = "delete";
    remove.addEventListener("click", () => {
      void api.remove(row.id).then(() => refreshProfiles(api, select, table));
    });
    const td = document.createElement("td");
    td.appendChild(remove);
    tr.appendChild(td);
    table.appendChild(tr);
  }
}

function profileFromForm(): ProfileRecord {
  const arms = el<HTMLSelectElement>("profile-arms").value;
  const record: ProfileRecord = {
    id: el<HTMLInputElement>("profile-id").value.trim(),
    fullName: el<HTMLInputElement>("profile-name").value.trim(),
    age: Number(el<HTMLInputElement>("profile-age").value),
    sex: el<HTMLSelectElement>("profile-sex").value as ProfileRecord["sex"],
    laterality: el<HTMLSelectElement>("profile-laterality").value as ProfileRecord["laterality"],
    disability: el<HTMLSelectElement>("profile-disability").value as ProfileRecord["disability"],
    device: {
      posture: el<HTMLSelectElement>("profile-posture").value as "Standing" | "Seated",
      rgbCameraActive: el<HTMLInputElement>("profile-rgb").checked,
      depthDistance: Number(el<HTMLInputElement>("profile-depth").value) || 2.0,
      armMobility: arms === "BothArms"
        ? { use: "BothArms", dominant: el<HTMLSelectElement>("profile-dominant").value as "Left" | "Right" }
        : { use: arms as "RightArmOnly" | "LeftArmOnly" },
    },
  };
  return record;
}

function main(): void {
  const api = new ProfileApi((url, init) => fetch(url, init));
  const profileSelect = el<HTMLSelectElement>("session-profile");
  const profileTable = el<HTMLTableSectionElement>("profile-rows");
  const status = el<HTMLSpanElement>("status");
  const canvas = el<HTMLCanvasElement>("stage");
  const painter = new CanvasPainter(canvas);

  const vm = initialViewModel();
  const repaint = () => painter.paint(renderScene(vm));

  const proto = location.protocol === "https:" ? "wss" : "ws";
  const channel = new SessionChannel(
    webSocketTransport(`${proto}://${location.host}/session`));
  const emitter = new InputEmitter();

  channel.onStateChange((connected) => {
    setConnected(vm, connected);
    status.textContent = connected ? "connected" : "disconnected";
    repaint();
  });
  channel.onMessage((msg) => {
    applyServerMessage(vm, msg);
    repaint();
  });

  el<HTMLButtonElement>("profile-create").addEventListener("click", () => {
    void api.create(profileFromForm())
      .then(() => refreshProfiles(api, profileSelect, profileTable))
      .catch((err) => { status.textContent = String(err); });
  });

  el<HTMLButtonElement>("session-start").addEventListener("click", () => {
    channel.send({ type: "hello", profileId: profileSelect.value });
    channel.send({
      type: "start",
      activity: el<HTMLSelectElement>("session-activity").value,
    });
  });

  canvas.addEventListener("pointermove", (ev) => {
    const rect = canvas.getBoundingClientRect();
    const msg = emitter.pointerMoved(ev.clientX, ev.clientY, rect);
    if (msg && channel.send(msg) && msg.type === "pointer") {
      trackLocalPointer(vm, msg.u, msg.v);
      repaint();
    }
  });
  window.addEventListener("keydown", (ev) => {
    const msg = emitter.keyPressed(ev.key);
    if (msg) channel.send(msg);
  });
  window.setInterval(() => {
    channel.send(emitter.tick());
  }, TICK_INTERVAL_MS);

  void refreshProfiles(api, profileSelect, profileTable);
  repaint();
}

main();
