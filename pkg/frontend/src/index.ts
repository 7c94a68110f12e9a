export * from './schema';
export * from './projection';
export * from './engine';
export * from './diagram_view';
export * from './search_view';
export * from './cycles_view';
export * from './app';
