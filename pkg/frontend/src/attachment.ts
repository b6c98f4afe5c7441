// Attachment handling: validate the picked file is a PNG and carry it
// as the base64 payload the chat endpoint expects.

const PNG_MAGIC = [0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a];

export function isPng(bytes: Uint8Array): boolean {
  if (bytes.length < PNG_MAGIC.length) return false;
  return PNG_MAGIC.every((b, i) => bytes[i] === b);
}

export function bytesToBase64(bytes: Uint8Array): string {
  let binary = "";
  const chunk = 0x8000;
  for (let i = 0; i < bytes.length; i += chunk) {
    binary += String.fromCharCode(...bytes.subarray(i, i + chunk));
  }
  return btoa(binary);
}

export interface PendingAttachment {
  name: string;
  base64: string;
  dataUrl: string; // for the preview <img>
}

export async function readAttachment(file: File): Promise<PendingAttachment> {
  const bytes = new Uint8Array(await file.arrayBuffer());
  if (!isPng(bytes)) {
    throw new Error(`${file.name} is not a PNG image`);
  }
  const base64 = bytesToBase64(bytes);
  return {
    name: file.name,
    base64,
    dataUrl: `data:image/png;base64,${base64}`,
  };
}
