// Teacher console: profile records over the plain HTTP endpoints. The fetch
// function is injectable for tests; rendering produces plain data rows.

export interface DeviceRecord {
  posture: "Standing" | "Seated";
  rgbCameraActive: boolean;
  depthDistance: number;
  armMobility: { use: "BothArms" | "RightArmOnly" | "LeftArmOnly"; dominant?: "Left" | "Right" };
}

export interface ProfileRecord {
  id: string;
  fullName: string;
  age: number;
  sex: "F" | "M" | "Other";
  laterality: "None" | "CannotRecognizeLeft" | "CannotRecognizeRight";
  disability: "Visual" | "Hearing" | "Physical" | "Autism";
  device: DeviceRecord;
}

export type FetchLike = (url: string, init?: {
  method?: string;
  headers?: Record<string, string>;
  body?: string;
}) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

export class ProfileApiError extends Error {
  readonly status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

async function expectOk(response: Awaited<ReturnType<FetchLike>>): Promise<unknown> {
  const payload = await response.json().catch(() => ({}));
  if (!response.ok) {
    const reason = (payload as { error?: string }).error ?? `request failed (${response.status})`;
    throw new ProfileApiError(response.status, reason);
  }
  return payload;
}

export class ProfileApi {
  private readonly fetchFn: FetchLike;
  private readonly base: string;

  constructor(fetchFn: FetchLike, base = "") {
    this.fetchFn = fetchFn;
    this.base = base;
  }

  async list(): Promise<ProfileRecord[]> {
    return await expectOk(await this.fetchFn(`${this.base}/profiles`)) as ProfileRecord[];
  }

  async create(record: ProfileRecord): Promise<ProfileRecord> {
    return await expectOk(await this.fetchFn(`${this.base}/profiles`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(record),
    })) as ProfileRecord;
  }

  async update(record: ProfileRecord): Promise<ProfileRecord> {
    return await expectOk(await this.fetchFn(`${this.base}/profiles/${encodeURIComponent(record.id)}`, {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(record),
    })) as ProfileRecord;
  }

  async remove(profileId: string): Promise<void> {
    await expectOk(await this.fetchFn(`${this.base}/profiles/${encodeURIComponent(profileId)}`, {
      method: "DELETE",
    }));
  }
}

export interface ProfileRow {
  id: string;
  name: string;
  age: number;
  disability: string;
  laterality: string;
  posture: string;
  arms: string;
}

export function profileRows(profiles: ProfileRecord[]): ProfileRow[] {
  return profiles.map((p) => ({
    id: p.id,
    name: p.fullName,
    age: p.age,
    disability: p.disability,
    laterality: p.laterality,
    posture: p.device.posture,
    arms: p.device.armMobility.dominant
      ? `${p.device.armMobility.use} (${p.device.armMobility.dominant})`
      : p.device.armMobility.use,
  }));
}
