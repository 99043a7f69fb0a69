import { ApiClient } from "./api.js";
import { SnapshotStore } from "./tray.js";
import { buildApp } from "./ui.js";

const root = document.querySelector<HTMLDivElement>("#app");
if (!root) throw new Error("missing #app mount point");

// Same-origin service by default; override with ?api=http://host:port
const apiBase = new URLSearchParams(location.search).get("api") ?? "";

buildApp(root, new ApiClient(apiBase), new SnapshotStore());
